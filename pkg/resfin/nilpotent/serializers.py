from rest_framework import serializers


class NilpotentGirthRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    entry_bound = serializers.IntegerField()
    analytic_entry_bound = serializers.IntegerField()
    modulus = serializers.IntegerField()
    bound = serializers.IntegerField()
    stated_bound = serializers.IntegerField()
    ball_size = serializers.IntegerField()
    injective = serializers.BooleanField()
    samples = serializers.IntegerField()
    homomorphism_failures = serializers.IntegerField()
