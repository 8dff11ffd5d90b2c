import os

from configurations import Configuration, values


class Base(Configuration):
    BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

    INSTALLED_APPS = [
        # Third Party Packages
        'rest_framework',

        # Own Packages
        'words',
        'permrep',
        'lowindex',
        'separability',
        'lcmlib',
        'covers',
        'nilpotent',
        'cli',
    ]

    # Nothing is persisted; every table is recomputed from its inputs.
    DATABASES = {}

    USE_I18N = values.BooleanValue(False)
    USE_TZ = values.BooleanValue(True)

    # REST FRAMEWORK
    REST_FRAMEWORK = {
        'DEFAULT_RENDERER_CLASSES': [
            'rest_framework.renderers.JSONRenderer',
        ],
        'COERCE_DECIMAL_TO_STRING': False,
        'UNICODE_JSON': True,
        'COMPACT_JSON': True,
        'DEFAULT_AUTHENTICATION_CLASSES': [],
        'DEFAULT_PERMISSION_CLASSES': [],
        'UNAUTHENTICATED_USER': None,
    }

    LOGGING = {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'verbose': {
                'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
            },
        },
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
                'stream': 'ext://sys.stderr',
                'formatter': 'verbose',
            },
        },
        'loggers': {
            'resfin': {
                'handlers': ['console'],
                'level': 'INFO',
                'propagate': False,
            },
        },
    }

    # Residual finiteness toolkit limits.
    # The environment may only lower the degree ceiling (see config.limits.get_max_degree).
    MAX_DEGREE = values.PositiveIntegerValue(16, environ_name='MAX_DEGREE', environ_prefix='RESFIN')

    SUBGROUP_INDEX_CAP = 12
    NORMAL_ORDER_CAP = 12

    FLAT_LENGTH_BUDGET = 10 ** 6

    VERIFY_ORDER_CAP = 8
    MEMBERSHIP_BUDGET = 4
    MEMBERSHIP_ORDER_CAP = 6

    NONTRIVIALITY_BATTERY = 64
    NONTRIVIALITY_SEED = 20100401
