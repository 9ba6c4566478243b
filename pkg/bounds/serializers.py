from fractions import Fraction

from rest_framework import serializers


class FractionField(serializers.Field):
    """Exact rationals as "p/q" strings (integers without a denominator)."""

    def to_representation(self, value):
        return str(Fraction(value))


class PairDistributionSerializer(serializers.Serializer):
    a = serializers.IntegerField()
    b = serializers.IntegerField()
    A = serializers.ListField(child=FractionField())
    B = serializers.ListField(child=FractionField())
    macwilliams_residual = serializers.ListField(child=FractionField())
    shadow = serializers.ListField(child=FractionField())


class EnumerationReportSerializer(serializers.Serializer):
    """Output of `enumerate`"""

    parameters = serializers.CharField()
    n = serializers.IntegerField()
    K = serializers.IntegerField()
    M = serializers.IntegerField()
    pairs = PairDistributionSerializer(many=True)
    A = serializers.ListField(child=FractionField())
    B = serializers.ListField(child=FractionField())
    shadow = serializers.ListField(child=FractionField())
    macwilliams_zero = serializers.BooleanField()
    distance = serializers.IntegerField()


class LPInstanceSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1)
    K = serializers.IntegerField(min_value=1)
    M = serializers.IntegerField(min_value=1)
    d = serializers.IntegerField(min_value=1)
    q = serializers.IntegerField(min_value=2)
    shadow = serializers.BooleanField()
    nested = serializers.BooleanField()
    label = serializers.CharField(read_only=True)


class LPResultSerializer(serializers.Serializer):
    """Output of `lp`: witness when feasible, Farkas multipliers when not"""

    instance = LPInstanceSerializer()
    status = serializers.CharField()
    witness = serializers.DictField(child=FractionField(), allow_null=True)
    certificate = serializers.DictField(child=FractionField(), allow_null=True)
    pivots = serializers.IntegerField()


class SweepEntrySerializer(serializers.Serializer):
    n = serializers.IntegerField()
    k = serializers.IntegerField()
    m = serializers.IntegerField()
    K = serializers.IntegerField()
    M = serializers.IntegerField()
    feasible = serializers.BooleanField()
