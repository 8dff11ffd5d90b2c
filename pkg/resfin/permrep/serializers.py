from rest_framework import serializers

from words.serializers import CappedIntegerField

# Image orders above this are reported as overflow.
ORDER_REPORT_CAP = 10 ** 4


class PermQuotientSerializer(serializers.Serializer):
    degree = serializers.IntegerField()
    gens = serializers.SerializerMethodField()
    transitive = serializers.BooleanField()
    regular = serializers.BooleanField()
    order = serializers.SerializerMethodField()

    def get_gens(self, obj):
        return obj.to_lists()

    def get_order(self, obj):
        if obj.regular:
            return obj.degree
        return CappedIntegerField().to_representation(obj.image_order(ORDER_REPORT_CAP))


class QuotientField(serializers.Field):
    """
    A witnessing action as its 1-based generator image lists; null when there is none.
    """

    def to_representation(self, value):
        return value.to_lists()
