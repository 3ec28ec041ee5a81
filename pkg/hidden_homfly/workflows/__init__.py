"""
Workflows built on the HOMFLYPT tools: seeded corpora, law suites, corpus
files and the two-strand tables.
"""

from .fuzz import FuzzSpec, FuzzCase, generate_corpus, regression_corpus
from .laws import LawContext, LawReport, SUITES, run_suites, replay_failure, render_table
from .corpus import CorpusRunner, CorpusResult, run_corpus_file, write_results
from .two_strand import TwoStrandTable, build_table, closed_form

__all__ = [
    # Corpora
    'FuzzSpec',
    'FuzzCase',
    'generate_corpus',
    'regression_corpus',

    # Law suites
    'LawContext',
    'LawReport',
    'SUITES',
    'run_suites',
    'replay_failure',
    'render_table',

    # Corpus files
    'CorpusRunner',
    'CorpusResult',
    'run_corpus_file',
    'write_results',

    # Two-strand tables
    'TwoStrandTable',
    'build_table',
    'closed_form',
]
