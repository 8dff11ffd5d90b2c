from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class PermrepConfig(AppConfig):
    name = 'permrep'
    verbose_name = _('Permutation Representations App')
