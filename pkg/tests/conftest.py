import pytest

from oscover.piclattice import PicClass


def gram_intersect(a: PicClass, b: PicClass) -> int:
    """Independent oracle: expand both classes in the 13-element basis and use an explicit Gram matrix."""
    basis = ["C"] + [f"F{i}" for i in range(4)] + [f"s{i}" for i in range(4)] + [f"r{i}" for i in range(4)]
    gram = {}
    for x in basis:
        for y in basis:
            v = 0
            if {x[0], y[0]} == {"C", "F"}:
                v = 1
            elif x == y and x[0] in "sr":
                v = -1
            gram[x, y] = v

    def coords(p):
        out = {"C": p.c}
        for i in range(4):
            out[f"F{i}"] = p.fibers[i]
            out[f"s{i}"] = p.s[i]
            out[f"r{i}"] = p.r[i]
        return out

    ca, cb = coords(a), coords(b)
    return sum(ca[x] * cb[y] * gram[x, y] for x in basis for y in basis)


@pytest.fixture
def gram():
    return gram_intersect
