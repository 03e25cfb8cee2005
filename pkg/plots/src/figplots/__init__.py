"""Render figures from optimalf CSV files.

One script per figure kind, each with the same ``--in/--out/--title``
flags.  This layer never recomputes any mathematics: it reads the columns
the CLI documented and draws them, so the compute package stays the
single source of truth.
"""

__version__ = "0.1.0"
