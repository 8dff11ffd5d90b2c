from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class LcmlibConfig(AppConfig):
    name = 'lcmlib'
    verbose_name = _('Least Common Multiples App')
