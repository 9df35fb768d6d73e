"""
Leitura e escrita de corpora de trajetórias e de arquivos de gramática
Formato de corpus (um diretório):
    <trial>.csv     colunas t,x,y,z (cabeçalho opcional, colunas extras ignoradas)
    <trial>.labels  linhas "label,start,end" e opcionalmente "task,<rótulo>"
    corpus.yaml     metadados opcionais (dataset_id, kind, seed, ...)
"""
import csv
import io
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple
import yaml
from core.exceptions import InvalidSpec, MissingLabel, ParseError, StorageError
from grammar.grammar_scripts import BehaviorBoundary, Corpus, Trajectory
from grammar.grammar_scripts.dcc_codec import ActionGrammar
from grammar.serializers import GrammarSerializer
logger = logging.getLogger(__name__)
CORPUS_METADATA_FILE = 'corpus.yaml'
GRAMMAR_MANIFEST_FILE = 'manifest.json'
TRAJECTORY_HEADER = ('t', 'x', 'y', 'z')
class TrajectoryFileParser:
    """Parser tolerante de CSV de trajetória e do sidecar de rótulos"""
    @staticmethod
    def parse_csv(content: str, path='<memory>') -> Tuple[List[float], List[Tuple[float, float, float]]]:
        times, positions = [], []
        reader = csv.reader(io.StringIO(content))
        for row_num, row in enumerate(reader, start=1):
            cells = [cell.strip() for cell in row]
            if not any(cells):
                continue
            if row_num == 1 and not TrajectoryFileParser._is_number(cells[0]):
                continue
            if len(cells) < 4:
                raise ParseError(f"esperadas 4 colunas t,x,y,z, encontradas {len(cells)}", path, row_num)
            try:
                t, x, y, z = (float(cell) for cell in cells[:4])
            except ValueError:
                raise ParseError(f"valor não numérico em {cells[:4]}", path, row_num)
            times.append(t)
            positions.append((x, y, z))
        return times, positions
    @staticmethod
    def parse_labels(content: str, path='<memory>') -> Tuple[Optional[str], List[BehaviorBoundary]]:
        task_label = None
        boundaries = []
        for row_num, row in enumerate(csv.reader(io.StringIO(content)), start=1):
            cells = [cell.strip() for cell in row]
            if not any(cells) or cells[0].startswith('#'):
                continue
            if not cells[0]:
                raise MissingLabel(f"{path}:{row_num}: rótulo vazio")
            if cells[0].lower() == 'task':
                if len(cells) < 2 or not cells[1]:
                    raise MissingLabel(f"{path}:{row_num}: linha 'task' sem rótulo")
                task_label = cells[1]
                continue
            if len(cells) < 3:
                raise ParseError("esperado label,start,end", path, row_num)
            try:
                boundaries.append(BehaviorBoundary(cells[0], float(cells[1]), float(cells[2])))
            except ValueError:
                raise ParseError(f"tempos não numéricos em {cells[:3]}", path, row_num)
        return task_label, boundaries
    @staticmethod
    def _is_number(cell: str) -> bool:
        try:
            float(cell)
            return True
        except ValueError:
            return False
class CorpusFileHandler:
    @classmethod
    def load_corpus(cls, path, format='csv', require_task_labels=False, dataset_id=None) -> Corpus:
        """
        Carrega um corpus de um diretório (ou de um único CSV)
        Args:
            path: diretório com <trial>.csv (+ .labels) ou arquivo CSV
            format: apenas 'csv'
            require_task_labels: exige linha 'task' em todo sidecar
        Returns:
            Corpus ordenado por trial id
        """
        if format != 'csv':
            raise InvalidSpec(f"Formato de corpus não suportado: {format}")
        root = Path(path)
        if not root.exists():
            raise StorageError(f"Caminho não encontrado: {root}")
        files = [root] if root.is_file() else sorted(root.glob('*.csv'))
        metadata = cls._read_metadata(root if root.is_dir() else root.parent)
        trajectories = [cls.load_trajectory(file, require_task_labels) for file in files]
        corpus_id = dataset_id or metadata.get('dataset_id') or (root.name if root.is_dir() else root.stem)
        logger.info(f"[IO] Corpus {corpus_id}: {len(trajectories)} trials carregados de {root}")
        return Corpus(tuple(trajectories), str(corpus_id), metadata)
    @classmethod
    def load_trajectory(cls, csv_path, require_task_labels=False) -> Trajectory:
        csv_path = Path(csv_path)
        times, positions = TrajectoryFileParser.parse_csv(cls._read_text(csv_path), csv_path)
        labels_path = csv_path.with_suffix('.labels')
        task_label, boundaries = None, []
        if labels_path.exists():
            task_label, boundaries = TrajectoryFileParser.parse_labels(cls._read_text(labels_path), labels_path)
        if require_task_labels and task_label is None:
            raise MissingLabel(f"Trial {csv_path.stem} sem rótulo de tarefa em {labels_path}")
        return Trajectory(times, positions, trial_id=csv_path.stem, task_label=task_label, behavior_boundaries=tuple(boundaries))
    @classmethod
    def save_corpus(cls, corpus: Corpus, directory) -> Path:
        directory = Path(directory)
        try:
            directory.mkdir(parents=True, exist_ok=True)
            for traj in corpus:
                rows = [','.join(TRAJECTORY_HEADER)]
                rows += [','.join(repr(float(v)) for v in (t, *p)) for t, p in zip(traj.times, traj.positions)]
                (directory / f"{traj.trial_id}.csv").write_text('\n'.join(rows) + '\n', encoding='utf-8')
                labels = [f"task,{traj.task_label}"] if traj.task_label else []
                labels += [f"{b.label},{b.start!r},{b.end!r}" for b in traj.behavior_boundaries]
                if labels:
                    (directory / f"{traj.trial_id}.labels").write_text('\n'.join(labels) + '\n', encoding='utf-8')
            metadata = dict(corpus.metadata, dataset_id=corpus.dataset_id, n_trials=len(corpus))
            (directory / CORPUS_METADATA_FILE).write_text(yaml.safe_dump(metadata, sort_keys=True), encoding='utf-8')
        except OSError as e:
            raise StorageError(f"Erro ao gravar corpus em {directory}: {e}")
        logger.info(f"[IO] Corpus {corpus.dataset_id} gravado em {directory} ({len(corpus)} trials)")
        return directory
    @staticmethod
    def combine_corpora(corpora) -> Corpus:
        """União de corpora base; o id é a concatenação ordenada dos ids (AB, AC, ABC)"""
        corpora = list(corpora)
        if not corpora:
            raise InvalidSpec("Nenhum corpus para combinar")
        dataset_id = ''.join(sorted({char for corpus in corpora for char in corpus.dataset_id}))
        trajectories = tuple(traj for corpus in corpora for traj in corpus)
        sources = [corpus.dataset_id for corpus in corpora]
        return Corpus(trajectories, dataset_id, {'sources': sources})
    @staticmethod
    def _read_metadata(directory: Path) -> Dict:
        metadata_path = directory / CORPUS_METADATA_FILE
        if not metadata_path.exists():
            return {}
        try:
            return yaml.safe_load(metadata_path.read_text(encoding='utf-8')) or {}
        except yaml.YAMLError as e:
            raise ParseError(f"YAML inválido: {e}", metadata_path)
    @staticmethod
    def _read_text(path: Path) -> str:
        try:
            return path.read_text(encoding='utf-8')
        except OSError as e:
            raise StorageError(f"Erro ao ler {path}: {e}")
class GrammarFileHandler:
    """Arquivos de gramática: uma linha de ids separados por vírgula"""
    @staticmethod
    def grammar_filename(grammar: ActionGrammar) -> str:
        if grammar.behavior_label:
            return f"{grammar.source_trial}__{grammar.behavior_label}.grammar"
        return f"{grammar.source_trial}.grammar"
    @staticmethod
    def save_grammar(grammar: ActionGrammar, path) -> Path:
        path = Path(path)
        try:
            path.write_text(grammar.as_text(), encoding='utf-8')
        except OSError as e:
            raise StorageError(f"Erro ao gravar gramática em {path}: {e}")
        return path
    @staticmethod
    def load_symbols(path) -> Tuple[int, ...]:
        path = Path(path)
        try:
            content = path.read_text(encoding='utf-8').strip()
        except OSError as e:
            raise StorageError(f"Erro ao ler gramática {path}: {e}")
        if not content:
            return ()
        try:
            return tuple(int(cell) for cell in content.split(','))
        except ValueError:
            raise ParseError("gramática com id não inteiro", path, 1)
    @classmethod
    def save_grammar_set(cls, grammars, directory, extra=None) -> Path:
        """Grava um arquivo por gramática mais o manifest.json"""
        directory = Path(directory)
        try:
            directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise StorageError(f"Erro ao criar {directory}: {e}")
        entries = []
        for grammar in grammars:
            filename = cls.grammar_filename(grammar)
            cls.save_grammar(grammar, directory / filename)
            entry = dict(GrammarSerializer(grammar).data)
            entry.pop('symbols')
            entry['file'] = filename
            entries.append(entry)
        manifest = {'grammars': entries}
        manifest.update(extra or {})
        try:
            (directory / GRAMMAR_MANIFEST_FILE).write_text(json.dumps(manifest, indent=2, sort_keys=True) + '\n', encoding='utf-8')
        except OSError as e:
            raise StorageError(f"Erro ao gravar manifest em {directory}: {e}")
        logger.info(f"[IO] {len(entries)} gramáticas gravadas em {directory}")
        return directory
    @classmethod
    def load_grammar_set(cls, directory) -> Tuple[List[ActionGrammar], Dict]:
        directory = Path(directory)
        manifest_path = directory / GRAMMAR_MANIFEST_FILE
        if not manifest_path.exists():
            raise StorageError(f"manifest.json não encontrado em {directory}")
        try:
            manifest = json.loads(manifest_path.read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as e:
            raise ParseError(f"manifest inválido: {e}", manifest_path)
        grammars = []
        for entry in manifest.get('grammars', []):
            payload = dict(entry, symbols=list(cls.load_symbols(directory / entry['file'])))
            serializer = GrammarSerializer(data=payload)
            if not serializer.is_valid():
                raise ParseError(f"entrada inválida {entry.get('file')}: {serializer.errors}", manifest_path)
            grammars.append(serializer.save())
        return grammars, manifest
