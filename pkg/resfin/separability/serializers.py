from rest_framework import serializers

from permrep.serializers import QuotientField
from words.serializers import CappedIntegerField


class DivisibilityRowSerializer(serializers.Serializer):
    rank = serializers.IntegerField()
    n = serializers.IntegerField()
    normal = serializers.BooleanField()
    cap = serializers.IntegerField()
    value = CappedIntegerField()
    argmax = serializers.CharField(allow_null=True)
    witness = QuotientField(allow_null=True)
    resolved = serializers.BooleanField()


class GirthRowSerializer(serializers.Serializer):
    rank = serializers.IntegerField()
    n = serializers.IntegerField()
    cap = serializers.IntegerField()
    value = CappedIntegerField()
    closed_form = serializers.IntegerField(allow_null=True)
    witness = QuotientField(allow_null=True)
    resolved = serializers.BooleanField()


class InequalityRowSerializer(serializers.Serializer):
    which = serializers.IntegerField()
    rank = serializers.IntegerField()
    n = serializers.IntegerField()
    resolved = serializers.BooleanField()
    passed = serializers.BooleanField()
    links = serializers.DictField()
