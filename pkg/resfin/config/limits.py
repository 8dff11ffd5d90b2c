from django.conf import settings

from .exceptions import ResourceLimitError

# Generator images are encoded with one byte per point.
HARD_DEGREE_LIMIT = 16


def get_max_degree():
    return min(HARD_DEGREE_LIMIT, settings.MAX_DEGREE)


def get_subgroup_index_cap():
    return min(settings.SUBGROUP_INDEX_CAP, get_max_degree())


def get_normal_order_cap():
    return min(settings.NORMAL_ORDER_CAP, get_max_degree())


def get_flat_budget():
    return settings.FLAT_LENGTH_BUDGET


def get_verify_order_cap():
    return settings.VERIFY_ORDER_CAP


def get_membership_budget():
    return settings.MEMBERSHIP_BUDGET


def get_membership_order_cap():
    return settings.MEMBERSHIP_ORDER_CAP


def get_nontriviality_battery():
    return settings.NONTRIVIALITY_BATTERY, settings.NONTRIVIALITY_SEED


def check_degree(degree):
    if degree > get_max_degree():
        raise ResourceLimitError(
            f'degree {degree} exceeds the degree ceiling {get_max_degree()}',
            params={'degree': degree, 'ceiling': get_max_degree()}
        )
    return degree
