# SPDX-License-Identifier: MIT
"""Smoke test for the bnhopf_py extension. Run with pytest or directly."""
import json

import pytest

import bnhopf_py as bh


def test_basis():
    assert bh.basis(2, 1) == ["g(1,1)", "w(1) o one(1)"]
    assert len(bh.basis(4, 3, "Bplus")) == len(bh.basis(4, 3, ring="Bplus"))


def test_products():
    assert bh.mul("g(2,1)^+", "g(2,1)^-", "Bplus") == [
        "(g(2,1)^2)^+",
        "(g(2,1)^2)^-",
        "(g(1,2)^3)^0",
    ]
    assert bh.transfer("one-", "one-", "Bplus") == ["one+"]
    assert len(bh.comul("g(2,1)^+", "Bplus")) == 4
    assert bh.bidegree("g(2,1)^+") == (4, 3)


def test_res_tr():
    assert bh.res("g(2,1)") == ["g(2,1)^+", "g(2,1)^-"]
    assert bh.tr("g(2,1)^+") == ["g(2,1)"]
    assert bh.tr(" + ".join(bh.res("w(3)"))) == []


def test_restriction():
    assert bh.restrict_to("g(2,1)^+", "4") == "y[1,1]^3+y[1,1]^2*y[1,2]+y[1,2]^3"


def test_tables():
    rows = bh.poincare(2, 4, "Bplus")
    assert rows[2] == [1, 1, 1, 1, 1]
    assert bh.detect(3, 2) == (len(bh.basis(3, 2, "Bplus")),) * 2


def test_verify():
    ok, report = bh.verify("fn")
    assert ok
    assert json.loads(report)["suite"] == "fn"


def test_errors():
    with pytest.raises(ValueError, match="column 8"):
        bh.evaluate("g(2,1)^? ")
    with pytest.raises(ValueError):
        bh.verify("nope")
    with pytest.raises(ValueError):
        bh.basis(1, 1, "C")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
