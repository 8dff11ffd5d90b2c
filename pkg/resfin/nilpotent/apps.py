from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class NilpotentConfig(AppConfig):
    name = 'nilpotent'
    verbose_name = _('Nilpotent Girth App')
