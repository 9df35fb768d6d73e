"""
Linha de comando do pipeline de gramáticas de ação
    python manage.py synth | encode | align | colormap | train | predict | evaluate
"""
import os
import sys
def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django não encontrado. Instale as dependências com "
            "'pip install -r requirements.txt' no ambiente ativo."
        ) from exc
    execute_from_command_line(sys.argv)
if __name__ == '__main__':
    main()
