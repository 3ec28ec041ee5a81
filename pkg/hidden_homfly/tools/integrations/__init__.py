"""
Integrations package for the HOMFLYPT tools.
Contains exporters that hand computation trees to external renderers.
"""

from .tree_export import (
    FORMATS,
    TreeExportError,
    export_tree,
    from_json,
    kind_counts,
    to_dot,
    to_json,
    write_tree,
)

__all__ = [
    'FORMATS',
    'TreeExportError',
    'export_tree',
    'from_json',
    'kind_counts',
    'to_dot',
    'to_json',
    'write_tree',
]
