"""Backend selection for the array kernels.

The compiled extension is used when it is importable.  Setting
``VIZING8_BACKEND=python`` forces the pure-Python twin, which is the same
source file executed by the interpreter.
"""
from __future__ import annotations

import importlib.machinery
import importlib.util
import os
import sys
from pathlib import Path
from types import ModuleType

ROW = 46
PLAN = 40
MAXSTEP = 10

T0, T1, T2, T3, T4, T5, T6, FAN, AB = range(9)
TAG_NAMES = ("T0", "T1", "T2", "T3", "T4", "T5", "T6", "FAN", "AB")
ASSIGN, SWAP, RECOLOR = 1, 2, 3

OK = 0
E_NOTBFLY = 1
E_PRECOND = 2
E_FAN = 3
E_COHERENCE = 4
E_CONFLICT = 5
E_UNSUPPORTED = 6
E_WITNESS = 7
E_INCOMPLETE = 8
E_NOTWEAK = 9
E_INTERNAL = 10


def load_python() -> ModuleType:
    """Load ``_core.py`` as an ordinary Python module."""
    name = "vizing8._core_py"
    if name in sys.modules:
        return sys.modules[name]
    path = Path(__file__).with_name("_core.py")
    loader = importlib.machinery.SourceFileLoader(name, str(path))
    spec = importlib.util.spec_from_loader(name, loader)
    mod = importlib.util.module_from_spec(spec)
    loader.exec_module(mod)
    sys.modules[name] = mod
    return mod


def load_compiled() -> ModuleType | None:
    try:
        from . import _core
    except ImportError:
        return None
    # an unbuilt checkout imports the .py source under the same name
    if not getattr(_core, "__file__", "").endswith((".so", ".pyd")):
        return None
    return _core


def backend(name: str | None) -> tuple[ModuleType, str]:
    """Kernel module for "cython", "python", or None for the selected one."""
    if name is None:
        return core, BACKEND
    if name == "python":
        return load_python(), "python"
    if name == "cython":
        mod = load_compiled()
        if mod is None:
            raise ImportError("the compiled extension is not built")
        return mod, "cython"
    raise ValueError(f"unknown backend {name!r}")


def _select() -> tuple[ModuleType, str]:
    want = os.environ.get("VIZING8_BACKEND", "").strip().lower()
    if want != "python":
        mod = load_compiled()
        if mod is not None:
            return mod, "cython"
        if want == "cython":
            raise ImportError("VIZING8_BACKEND=cython but the extension is not built")
    return load_python(), "python"


core, BACKEND = _select()
assert core.layout() == (ROW, PLAN, MAXSTEP, FAN, AB)
