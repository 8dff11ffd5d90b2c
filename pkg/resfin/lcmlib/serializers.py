import json

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer

from config.exceptions import InputError
from words.models import FreeWord, SLWord
from words.serializers import CappedIntegerField, SLWordField

from .models import WitnessCertificate


class ElementField(serializers.Field):
    """
    An element of S: a word in text syntax or a straight-line listing. Parsing needs the certificate rank,
    so it is finished in CertificateSerializer.validate.
    """

    def to_representation(self, value):
        if isinstance(value, SLWord):
            return SLWordField().to_representation(value)
        return str(value)

    def to_internal_value(self, data):
        if not isinstance(data, (str, dict)):
            raise serializers.ValidationError('expected a word in text syntax or a straight-line listing')
        return data


class CertificateSerializer(serializers.Serializer):
    rank = serializers.IntegerField(min_value=1)
    S = serializers.ListField(child=ElementField(), allow_empty=False)
    delta = SLWordField()
    bound = serializers.IntegerField(min_value=0)
    derivations = serializers.ListField(child=serializers.DictField())
    evidence = serializers.DictField()
    depth = serializers.IntegerField(min_value=0, default=0)
    max_length = serializers.IntegerField(min_value=0, default=0)
    conjugators = serializers.ListField(child=serializers.IntegerField(), default=list)

    def validate(self, attrs):
        rank = attrs['rank']
        if attrs['delta'].rank != rank:
            raise serializers.ValidationError({'delta': f'rank {attrs["delta"].rank} does not match {rank}'})
        attrs['S'] = [
            FreeWord.parse(rank, item) if isinstance(item, str) else SLWordField().to_internal_value(item)
            for item in attrs['S']
        ]
        if any(element.rank != rank for element in attrs['S']):
            raise serializers.ValidationError({'S': f'every element must have rank {rank}'})
        return attrs

    def create(self, validated_data):
        validated_data.pop('rank')
        return WitnessCertificate(**validated_data)


def dump_certificate(certificate):
    return JSONRenderer().render(CertificateSerializer(certificate).data).decode('utf-8')


def load_certificate(data):
    """
    Certificate from its JSON text (or already decoded document); InputError when malformed.
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except ValueError as exc:
            raise InputError(f'certificate is not valid JSON: {exc}')
    if not isinstance(data, dict):
        raise InputError('certificate must be a JSON object')
    serializer = CertificateSerializer(data=data)
    if not serializer.is_valid():
        raise InputError('malformed certificate', params={'errors': serializer.errors})
    return serializer.save()


class LcmWitnessRowSerializer(serializers.Serializer):
    rank = serializers.IntegerField()
    size = serializers.IntegerField()
    max_length = serializers.IntegerField()
    depth = serializers.IntegerField()
    conjugators = serializers.ListField(child=serializers.IntegerField())
    bound = serializers.IntegerField()
    stated_bound = serializers.IntegerField()
    delta_nodes = serializers.IntegerField()
    delta_length = CappedIntegerField()
    quotients_checked = serializers.IntegerField()
    verified = serializers.BooleanField()
    diagnostics = serializers.ListField(child=serializers.CharField())


class PowerWitnessRowSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    cap = serializers.IntegerField()
    witness_bound = serializers.IntegerField()
    stated_lower = serializers.IntegerField()
    lower = serializers.IntegerField()
    killed_through = serializers.IntegerField()
    injective = serializers.BooleanField()
    resolved = serializers.BooleanField()


class VerifyRowSerializer(serializers.Serializer):
    certificate = serializers.CharField()
    size = serializers.IntegerField()
    bound = serializers.IntegerField()
    quotients_checked = serializers.IntegerField()
    ok = serializers.BooleanField()
    diagnostics = serializers.ListField(child=serializers.CharField())
