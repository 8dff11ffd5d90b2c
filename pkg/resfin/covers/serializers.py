from rest_framework import serializers


class ScanRowSerializer(serializers.Serializer):
    scan = serializers.CharField()
    m = serializers.IntegerField()
    marked = serializers.IntegerField()
    max_degree = serializers.IntegerField()
    exponent = serializers.IntegerField()
    covers = serializers.IntegerField()
    points_checked = serializers.IntegerField()
    nonclosing = serializers.IntegerField()
    violations = serializers.SerializerMethodField()

    def get_violations(self, obj):
        return len(obj['violations'])


class Theorem4RowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    lcm = serializers.IntegerField()
    witness_bound = serializers.IntegerField()
    dnormal_lower = serializers.IntegerField()
    resolved = serializers.BooleanField()


class ChebyshevRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    lcm = serializers.IntegerField()
    log = serializers.DecimalField(max_digits=None, decimal_places=3)
    ratio = serializers.DecimalField(max_digits=None, decimal_places=3)
    in_window = serializers.BooleanField()
