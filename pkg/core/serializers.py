"""
RunConfig: parâmetros de uma execução do pipeline
Combina defaults (settings/ambiente), arquivo YAML e flags de linha de comando.
"""
from rest_framework import serializers
MODE_CHOICES = ['ff', 'aff']
ALIGNMENT_CHOICES = ['cut', 'resample']
KERNEL_CHOICES = ['linear', 'svc_linear', 'polynomial', 'rbf']
ENCODING_CHOICES = ['integer', 'one_hot']
SCOPE_CHOICES = ['task', 'behavior']
INIT_CONVENTION_CHOICES = ['least_aligned_axis', 'osculating']
RESAMPLE_TEST_UNIT_CHOICES = ['train', 'independent']
class RunConfigSerializer(serializers.Serializer):
    """Validação da configuração de execução"""
    mode = serializers.ChoiceField(
        choices=MODE_CHOICES,
        help_text="Frames de Frenet discretos (ff) ou acumulados (aff)",
        error_messages={'invalid_choice': 'mode deve ser ff ou aff'}
    )
    base_p = serializers.IntegerField(
        min_value=1,
        max_value=4,
        help_text="Base DCC p (1..4)",
        error_messages={
            'min_value': 'base deve estar entre 1 e 4',
            'max_value': 'base deve estar entre 1 e 4'
        }
    )
    alignment = serializers.ChoiceField(choices=ALIGNMENT_CHOICES)
    kernel = serializers.ChoiceField(choices=KERNEL_CHOICES)
    encoding = serializers.ChoiceField(choices=ENCODING_CHOICES)
    scope = serializers.ChoiceField(choices=SCOPE_CHOICES)
    seed = serializers.IntegerField(
        min_value=0,
        required=True,
        allow_null=False,
        help_text="Semente obrigatória para etapas estocásticas",
        error_messages={'null': 'seed é obrigatória'}
    )
    k_min = serializers.IntegerField(min_value=2, max_value=20)
    k_max = serializers.IntegerField(min_value=2, max_value=20)
    repeats = serializers.IntegerField(min_value=1)
    c = serializers.FloatField(min_value=1e-12, help_text="Penalidade C do SVM")
    poly_degree = serializers.IntegerField(min_value=1)
    poly_coef0 = serializers.FloatField()
    gamma = serializers.FloatField(min_value=1e-12, allow_null=True, required=False)
    motion_epsilon = serializers.FloatField(min_value=0.0)
    init_convention = serializers.ChoiceField(choices=INIT_CONVENTION_CHOICES)
    n_jobs = serializers.IntegerField()
    linear_epochs = serializers.IntegerField(min_value=1)
    smo_tol = serializers.FloatField(min_value=1e-12)
    smo_max_iter = serializers.IntegerField(min_value=1)
    resample_test_unit = serializers.ChoiceField(choices=RESAMPLE_TEST_UNIT_CHOICES)
    input_path = serializers.CharField(allow_null=True, required=False)
    output_path = serializers.CharField(allow_null=True, required=False)
    def validate(self, attrs):
        if attrs['k_min'] > attrs['k_max']:
            raise serializers.ValidationError({'k_min': 'k_min não pode exceder k_max'})
        if attrs['n_jobs'] == 0:
            raise serializers.ValidationError({'n_jobs': 'n_jobs não pode ser 0'})
        return attrs
