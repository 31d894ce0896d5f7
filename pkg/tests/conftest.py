import pytest

from kisslat import (
    BinaryCode,
    ConcatSpec,
    FieldTable,
    build_grs,
    concatenate,
    find_self_dual_basis,
    parse_code,
)

E8_TEXT = "binary-code n=8 k=4\n11111111\n11110000\n11001100\n10101010\n"


@pytest.fixture(scope="session")
def rep21() -> BinaryCode:
    return parse_code("binary-code n=2 k=1\n11\n")


@pytest.fixture(scope="session")
def e8() -> BinaryCode:
    return parse_code(E8_TEXT)


@pytest.fixture(scope="session")
def gf4() -> FieldTable:
    return FieldTable(2)


@pytest.fixture(scope="session")
def gf8() -> FieldTable:
    return FieldTable(3)


@pytest.fixture(scope="session")
def grs314(gf4):
    # the self-orthogonal [3,1,3] code over GF(4) spanned by (1, w, w^2)
    return build_grs(gf4, points=(1, 2, 3), multipliers=(1, 2, 3), K=1)


@pytest.fixture(scope="session")
def expansion62(grs314, gf4) -> BinaryCode:
    from kisslat import binary_image

    return binary_image(grs314, find_self_dual_basis(gf4))


@pytest.fixture(scope="session")
def concat182(grs314, gf4) -> BinaryCode:
    inner = parse_code("binary-code n=6 k=2\n111000\n000111\n")
    return concatenate(ConcatSpec(grs314, find_self_dual_basis(gf4), inner))


@pytest.fixture(scope="session")
def zero2() -> BinaryCode:
    return parse_code("binary-code n=2 k=0\n")


@pytest.fixture(scope="session")
def zero4() -> BinaryCode:
    return parse_code("binary-code n=4 k=0\n")


@pytest.fixture(scope="session")
def pairs42() -> BinaryCode:
    return parse_code("binary-code n=4 k=2\n1100\n0011\n")


@pytest.fixture(scope="session")
def pairs63() -> BinaryCode:
    return parse_code("binary-code n=6 k=3\n110000\n001100\n000011\n")


@pytest.fixture(scope="session")
def corpus(rep21, e8, expansion62, concat182, zero2, zero4):
    """The full test-code corpus the invariant suites run over."""
    return {
        "rep21": rep21,
        "e8": e8,
        "expansion62": expansion62,
        "concat182": concat182,
        "zero2": zero2,
        "zero4": zero4,
    }


@pytest.fixture(scope="session")
def small_corpus(rep21, expansion62, pairs42, pairs63, zero2, zero4):
    """Codes with n <= 6, where the full-box oracle is feasible."""
    return {
        "rep21": rep21,
        "expansion62": expansion62,
        "pairs42": pairs42,
        "pairs63": pairs63,
        "zero2": zero2,
        "zero4": zero4,
    }
