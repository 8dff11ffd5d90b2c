from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class LowindexConfig(AppConfig):
    name = 'lowindex'
    verbose_name = _('Low Index Subgroups App')
