from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class SeparabilityConfig(AppConfig):
    name = 'separability'
    verbose_name = _('Separability App')
