"""Boot Django the same way resfin/manage.py does so pytest can collect the SimpleTestCase suites."""
import os


def pytest_configure(config):
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    os.environ.setdefault('DJANGO_CONFIGURATION', 'Local')

    import configurations
    configurations.setup()
