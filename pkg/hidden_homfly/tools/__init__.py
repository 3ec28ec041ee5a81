"""
HOMFLYPT Tools Package.
Braid words, the exact Laurent rings, the skein evaluator for F_B(α, ξ) and
the hidden polynomial Q_B(α, T).
"""

from .braidword import BraidWord, BraidWordError, MarkovMove, MoveKind, apply_move, component_count
from .skein_f import EvalConfig, LeafConvention, Strategy, TreeRecord, eval_F, replay_tree
from .hidden_q import HiddenPolynomial, c_table, eval_Q_direct, recover_Q
from .evaluation import evaluate_word, WordEvaluationTool
from .config import get_config, set_config, ToolsConfig, ENV_VARS_HELP
from .utils.word_validator import parse_braid_word

__all__ = [
    # Braid words
    'BraidWord',
    'BraidWordError',
    'MarkovMove',
    'MoveKind',
    'apply_move',
    'component_count',
    'parse_braid_word',

    # Engines
    'EvalConfig',
    'LeafConvention',
    'Strategy',
    'TreeRecord',
    'eval_F',
    'replay_tree',
    'HiddenPolynomial',
    'c_table',
    'eval_Q_direct',
    'recover_Q',

    # Main functions
    'evaluate_word',
    'WordEvaluationTool',

    # Configuration
    'get_config',
    'set_config',
    'ToolsConfig',
    'ENV_VARS_HELP',
]
