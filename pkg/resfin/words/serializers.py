from rest_framework import serializers

from .models import FreeWord, Overflow, SLWord

UNKNOWN = 'unknown'


class FreeWordField(serializers.Field):
    """
    A reduced word in its text syntax ('' for the identity).
    """

    def __init__(self, rank=None, **kwargs):
        self.rank = rank
        super().__init__(**kwargs)

    def to_representation(self, value):
        return str(value)

    def to_internal_value(self, data):
        if not isinstance(data, str):
            raise serializers.ValidationError('expected a word in text syntax')
        return FreeWord.parse(self.rank or self.context['rank'], data)


class SLWordField(serializers.Field):
    """
    A straight-line word as its instruction listing.
    """

    def to_representation(self, value):
        return {'rank': value.rank, 'root': value.root, 'nodes': value.listing()}

    def to_internal_value(self, data):
        try:
            return SLWord.from_listing(data['rank'], data['nodes'], data.get('root'))
        except (KeyError, TypeError):
            raise serializers.ValidationError('expected {"rank", "nodes", "root"}')


class CappedIntegerField(serializers.Field):
    """
    An integer, None or Overflow; the last two render as 'unknown' and 'overflow'.
    """

    def get_attribute(self, instance):
        value = super().get_attribute(instance)
        return UNKNOWN if value is None else value

    def to_representation(self, value):
        if value is None or value == UNKNOWN:
            return UNKNOWN
        if isinstance(value, Overflow):
            return 'overflow'
        return int(value)


class GrowthRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    omega = CappedIntegerField()
