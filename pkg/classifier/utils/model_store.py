"""
Persistência de modelos e relatórios em JSON (chaves ordenadas, indentação 2)
"""
import json
import logging
from pathlib import Path
from core.exceptions import ParseError, StorageError
from classifier.serializers import FoldReportSerializer, SvmModelSerializer
logger = logging.getLogger(__name__)
class ModelStore:
    @staticmethod
    def dumps(data):
        return json.dumps(data, indent=2, sort_keys=True) + '\n'
    @classmethod
    def _write(cls, data, path):
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(cls.dumps(data), encoding='utf-8')
        except OSError as e:
            raise StorageError(f"Erro ao gravar {path}: {e}")
        return path
    @staticmethod
    def _read(path, serializer_class):
        path = Path(path)
        try:
            payload = json.loads(path.read_text(encoding='utf-8'))
        except OSError as e:
            raise StorageError(f"Erro ao ler {path}: {e}")
        except json.JSONDecodeError as e:
            raise ParseError(f"JSON inválido: {e.msg}", path, e.lineno)
        serializer = serializer_class(data=payload)
        if not serializer.is_valid():
            raise ParseError(f"conteúdo inválido: {dict(serializer.errors)}", path)
        return serializer.save()
    @classmethod
    def save_model(cls, model, path):
        path = cls._write(SvmModelSerializer(model).data, path)
        logger.info(f"[IO] Modelo {model.kernel} gravado em {path}")
        return path
    @classmethod
    def load_model(cls, path):
        return cls._read(path, SvmModelSerializer)
    @classmethod
    def save_report(cls, report, path):
        path = cls._write(FoldReportSerializer(report).data, path)
        logger.info(f"[IO] Relatório {report.dataset_id}/{report.kernel}/{report.alignment} gravado em {path}")
        return path
    @classmethod
    def load_report(cls, path):
        return cls._read(path, FoldReportSerializer)
    @classmethod
    def save_report_grid(cls, reports, path):
        """Relatórios de uma grade de comparação em um único JSON"""
        path = cls._write({'reports': [FoldReportSerializer(r).data for r in reports]}, path)
        logger.info(f"[IO] {len(reports)} relatórios gravados em {path}")
        return path
