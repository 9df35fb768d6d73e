"""
Serializers para modelos SVM e relatórios de validação cruzada
Formatação de saída (JSON estável) e validação na leitura
"""
import numpy as np
from rest_framework import serializers
from classifier.svm_scripts import Aggregate, BinaryMachine, FoldCell, FoldReport, SvmModel
from classifier.svm_scripts.kernels import KERNELS
from core.serializers import ALIGNMENT_CHOICES, ENCODING_CHOICES, MODE_CHOICES, SCOPE_CHOICES
def _array_or_none(value, ndim=1):
    if value is None:
        return None
    if ndim == 2:
        return np.asarray(value, dtype=float).reshape(len(value), -1) if value else np.zeros((0, 0))
    return np.asarray(value, dtype=float).reshape(-1)
class BinaryMachineSerializer(serializers.Serializer):
    """Uma máquina binária (primal ou dual)"""
    positive_class = serializers.CharField(help_text="Classe tratada como +1")
    bias = serializers.FloatField(help_text="b em <w, x> - b")
    weights = serializers.ListField(child=serializers.FloatField(), allow_null=True, required=False)
    dual_coef = serializers.ListField(child=serializers.FloatField(), allow_null=True, required=False)
    support_vectors = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField()),
        allow_null=True,
        required=False
    )
    iterations = serializers.IntegerField(min_value=0)
    def validate(self, attrs):
        if attrs.get('weights') is None and attrs.get('dual_coef') is None:
            raise serializers.ValidationError('Máquina sem pesos primais nem coeficientes duais')
        return attrs
    def create(self, validated_data):
        return BinaryMachine(
            positive_class=validated_data['positive_class'],
            bias=validated_data['bias'],
            weights=_array_or_none(validated_data.get('weights')),
            dual_coef=_array_or_none(validated_data.get('dual_coef')),
            support_vectors=_array_or_none(validated_data.get('support_vectors'), ndim=2),
            iterations=validated_data['iterations'],
        )
class SvmModelSerializer(serializers.Serializer):
    """Modelo SVM completo, com os parâmetros do pipeline usados no treino"""
    kernel = serializers.ChoiceField(choices=KERNELS)
    classes = serializers.ListField(child=serializers.CharField(), min_length=2)
    machines = BinaryMachineSerializer(many=True)
    c = serializers.FloatField(min_value=1e-12)
    degree = serializers.IntegerField(min_value=1)
    coef0 = serializers.FloatField()
    gamma = serializers.FloatField()
    feature_dim = serializers.IntegerField(min_value=1)
    encoding = serializers.ChoiceField(choices=ENCODING_CHOICES)
    alphabet_size = serializers.IntegerField(allow_null=True, required=False)
    base_p = serializers.IntegerField(allow_null=True, required=False, min_value=1, max_value=4)
    mode = serializers.ChoiceField(choices=MODE_CHOICES, allow_null=True, required=False)
    scope = serializers.ChoiceField(choices=SCOPE_CHOICES, allow_null=True, required=False)
    alignment = serializers.ChoiceField(choices=ALIGNMENT_CHOICES, allow_null=True, required=False)
    unit_length = serializers.FloatField(allow_null=True, required=False)
    metadata = serializers.DictField(required=False)
    def create(self, validated_data):
        machines = tuple(BinaryMachineSerializer().create(dict(m)) for m in validated_data.pop('machines'))
        validated_data['classes'] = tuple(validated_data['classes'])
        return SvmModel(machines=machines, **validated_data)
class AggregateSerializer(serializers.Serializer):
    avg = serializers.FloatField()
    min = serializers.FloatField()
    max = serializers.FloatField()
    def validate(self, attrs):
        if not attrs['min'] <= attrs['avg'] <= attrs['max']:
            raise serializers.ValidationError('avg fora de [min, max]')
        return attrs
class FoldCellSerializer(serializers.Serializer):
    k = serializers.IntegerField(min_value=2)
    effective_k = serializers.IntegerField(min_value=2)
    repeat = serializers.IntegerField(min_value=0)
    accuracy = serializers.FloatField(min_value=0.0, max_value=1.0)
    fold_sizes = serializers.ListField(child=serializers.IntegerField(min_value=1))
class FoldReportSerializer(serializers.Serializer):
    """Relatório da validação cruzada repetida"""
    dataset_id = serializers.CharField(allow_blank=True)
    kernel = serializers.ChoiceField(choices=KERNELS)
    alignment = serializers.ChoiceField(choices=ALIGNMENT_CHOICES)
    mode = serializers.ChoiceField(choices=MODE_CHOICES)
    base_p = serializers.IntegerField(min_value=1, max_value=4)
    scope = serializers.ChoiceField(choices=SCOPE_CHOICES)
    encoding = serializers.ChoiceField(choices=ENCODING_CHOICES)
    seed = serializers.IntegerField(min_value=0)
    repeats = serializers.IntegerField(min_value=1)
    k_min = serializers.IntegerField(min_value=2)
    k_max = serializers.IntegerField(min_value=2)
    n_samples = serializers.IntegerField(min_value=1)
    cells = FoldCellSerializer(many=True)
    per_k = serializers.DictField(child=AggregateSerializer())
    overall = AggregateSerializer()
    metadata = serializers.DictField(required=False)
    def create(self, validated_data):
        cells = tuple(
            FoldCell(c['k'], c['effective_k'], c['repeat'], c['accuracy'], tuple(c['fold_sizes']))
            for c in validated_data.pop('cells')
        )
        per_k = {int(k): Aggregate(**dict(v)) for k, v in validated_data.pop('per_k').items()}
        overall = Aggregate(**dict(validated_data.pop('overall')))
        validated_data.setdefault('metadata', {})
        return FoldReport(cells=cells, per_k=per_k, overall=overall, **validated_data)
