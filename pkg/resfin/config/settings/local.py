from configurations import values

from .base import Base


class Local(Base):

    SECRET_KEY = 'no_secret'

    DEBUG = values.BooleanValue(False)
