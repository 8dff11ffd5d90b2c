from configurations import values

from .base import Base


class Batch(Base):
    """
    Long table runs: raised default caps, quieter logging.
    """

    SECRET_KEY = 'no_secret'

    DEBUG = values.BooleanValue(False)

    SUBGROUP_INDEX_CAP = 14
    NORMAL_ORDER_CAP = 16

    FLAT_LENGTH_BUDGET = 10 ** 7

    LOGGING = dict(Base.LOGGING, loggers={
        'resfin': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
    })
