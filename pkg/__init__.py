"""Compat package shim for repository-root `GenPerm` package.

The source code lives inside `GenPerm/` (nested directory) while the
repository root also has an `__init__.py`. When a runner adds the parent of
the checkout to `sys.path`, Python may resolve this root package first and
imports like `GenPerm.cone` fail.

`__path__` is extended to include the nested source directory so
`GenPerm.<module>` works consistently across execution contexts.
"""

from pathlib import Path
from pkgutil import extend_path

# Namespace-compatible path extension.
__path__ = extend_path(__path__, __name__)  # type: ignore[name-defined]

_nested_src = Path(__file__).resolve().parent / "GenPerm"
if _nested_src.is_dir():
    nested_src_str = str(_nested_src)
    if nested_src_str not in __path__:
        __path__.append(nested_src_str)
