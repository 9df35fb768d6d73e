"""
Serializers do app grammar
Validação de gramáticas lidas do disco e formatação das gravadas
"""
from rest_framework import serializers
from grammar.grammar_scripts import ActionGrammar, FrameMode, Scope
from grammar.grammar_scripts.constants import SUPPORTED_BASES
class GrammarSerializer(serializers.Serializer):
    """Serializer de uma gramática de ação"""
    symbols = serializers.ListField(
        child=serializers.IntegerField(min_value=0),
        allow_empty=False,
        help_text="Ids de símbolos DCC em ordem"
    )
    base_p = serializers.ChoiceField(
        choices=SUPPORTED_BASES,
        help_text="Base DCC (1..4)",
        error_messages={'invalid_choice': 'Base DCC deve ser 1, 2, 3 ou 4'}
    )
    scope = serializers.ChoiceField(choices=[s.value for s in Scope], source='scope.value')
    mode = serializers.ChoiceField(choices=[m.value for m in FrameMode], source='mode.value')
    source_trial = serializers.CharField(allow_null=True, required=False)
    behavior_label = serializers.CharField(allow_null=True, required=False)
    task_label = serializers.CharField(allow_null=True, required=False)
    def validate(self, attrs):
        scope = attrs.get('scope', {}).get('value')
        if scope == Scope.BEHAVIOR.value and not attrs.get('behavior_label'):
            raise serializers.ValidationError({'behavior_label': 'Gramática de comportamento sem rótulo'})
        return attrs
    def create(self, validated_data):
        return ActionGrammar(
            symbols=tuple(validated_data['symbols']),
            base_p=validated_data['base_p'],
            scope=Scope(validated_data['scope']['value']),
            source_trial=validated_data.get('source_trial'),
            behavior_label=validated_data.get('behavior_label'),
            task_label=validated_data.get('task_label'),
            mode=FrameMode(validated_data['mode']['value']),
        )
class GrammarSummarySerializer(serializers.Serializer):
    """Linha de resumo impressa pelo comando encode"""
    source_trial = serializers.CharField()
    behavior_label = serializers.CharField(allow_null=True)
    length = serializers.SerializerMethodField()
    distinct_symbols = serializers.SerializerMethodField()
    def get_length(self, obj):
        return len(obj.symbols)
    def get_distinct_symbols(self, obj):
        return sorted(set(obj.symbols))
