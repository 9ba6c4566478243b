from rest_framework import serializers


class PauliField(serializers.Field):
    """Pauli operators as signed strings, e.g. "-ZIIIIIX"."""

    def to_representation(self, value):
        return str(value) if value is not None else None


class VerificationReportSerializer(serializers.Serializer):
    """Result of `verify` on one code file"""

    kind = serializers.ChoiceField(choices=['hybrid', 'union'])
    parameters = serializers.CharField()
    n = serializers.IntegerField()
    k = serializers.IntegerField(required=False, allow_null=True)
    m = serializers.IntegerField(required=False, allow_null=True)
    K = serializers.IntegerField()
    M = serializers.IntegerField()
    distance = serializers.IntegerField()
    distance_exact = serializers.BooleanField()
    witness = PauliField(required=False, allow_null=True)
    dense_distance = serializers.IntegerField(required=False, allow_null=True)
    degenerate = serializers.BooleanField(required=False, allow_null=True)
    degeneracy_witness = PauliField(required=False, allow_null=True)
    orthogonal = serializers.BooleanField(allow_null=True)
    declared = serializers.CharField(required=False, allow_null=True)
    matches_declared = serializers.BooleanField()


class CodeSummarySerializer(serializers.Serializer):
    """Generators of a constructed code (`family --format json`)"""

    parameters = serializers.CharField()
    n = serializers.IntegerField()
    quantum = serializers.ListField(child=PauliField())
    classical = serializers.ListField(child=PauliField())
    layout = serializers.CharField(required=False, allow_null=True)
    path = serializers.CharField(required=False, allow_null=True)
