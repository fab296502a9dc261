import os
import subprocess
import sys

import numpy as np

from surfcurves import _kernels
from surfcurves.geodesics import _encode, _encode_surface, comparison_depth
from surfcurves.surfaces import build_surface
from surfcurves.words import cyclic_classes


def test_compiled_matches_python():
    for name in ("pants", "torus1", "fatgraph:order=a+,b+,a-,b-;twists=b"):
        s = build_surface(name)
        gi, pos, twist = _encode_surface(s)
        for c in cyclic_classes(s.generators, 6, primitive_only=True):
            w = _encode(s, c, gi)
            d = comparison_depth(len(w), len(w))
            assert _kernels.compiled.linked_count(pos, twist, w, w, True, d) == _kernels.python.linked_count(
                pos, twist, w, w, True, d
            )


def test_encode_word():
    assert list(_kernels.encode_word("aBb", {"a": 0, "b": 1})) == [0, 3, 2]
    assert _kernels.encode_word("", {}).dtype == np.int64


def test_disable_flag_selects_python():
    env = dict(os.environ, SURFCURVES_DISABLE_NUMBA="1")
    code = "from surfcurves import _kernels; print(_kernels.NUMBA, _kernels.compiled is _kernels.python)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "True"]
