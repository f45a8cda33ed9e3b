"""Process-wide resource limits.

The values are read at call time, so changing an attribute of ``limits``
(as the command line does for ``--max-depth``) takes effect immediately.
"""

from dataclasses import dataclass


@dataclass
class Limits:
    max_depth: int = 64          # CNF nesting of ordinals
    node_budget: int = 10**6     # distinct interned sets / game forms
    nim_subfield: int = 4        # nim_inv works below 2**(2**nim_subfield)
    max_tree_depth: int = 6      # render_tree


limits = Limits()
