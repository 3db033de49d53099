import pytest

from lukatree import (
    ArityMismatchError,
    DegreeBelowMinusOneError,
    DegreesNotSortedError,
    DegreeTuple,
    DuplicateLetterError,
    FirstDegreeNotMinusOneError,
    binary_alphabet,
    format_alphabet,
    format_tuple,
    is_f_valid,
    make_tree_alphabet,
    motzkin_alphabet,
    parse_alphabet,
    parse_tuple,
)


def test_standard_alphabets():
    A = motzkin_alphabet()
    assert A.letters == ("a", "b", "c")
    assert A.degrees == (-1, 0, 1)
    assert A.k == 3
    assert [A.arity(i) for i in range(3)] == [0, 1, 2]
    B = binary_alphabet()
    assert B.degrees == (-1, 1)
    assert B.k == 2


def test_construction_errors():
    with pytest.raises(DuplicateLetterError):
        make_tree_alphabet(("a", "a"), (-1, 1))
    with pytest.raises(DuplicateLetterError):
        make_tree_alphabet(("ab", "c"), (-1, 1))
    with pytest.raises(FirstDegreeNotMinusOneError):
        make_tree_alphabet(("a", "b"), (0, 1))
    with pytest.raises(DegreesNotSortedError):
        make_tree_alphabet(("a", "b", "c"), (-1, 1, 0))
    with pytest.raises(DegreeBelowMinusOneError):
        make_tree_alphabet(("a", "b"), (-1, -2))
    with pytest.raises(ArityMismatchError):
        make_tree_alphabet(("a", "b"), (-1,))
    with pytest.raises(ArityMismatchError):
        make_tree_alphabet((), ())


def test_repeated_degrees_allowed():
    # several leaf letters are fine, degrees only need to be non-decreasing
    A = make_tree_alphabet(("a", "b", "c"), (-1, -1, 1))
    assert is_f_valid((1, 2, 1), A) is False
    assert is_f_valid((1, 2, 2), A)
    assert is_f_valid((2, 1, 2), A)


def test_alphabet_text_form_round_trip():
    A = parse_alphabet("a:-1,b:0,c:1")
    assert A == motzkin_alphabet()
    assert format_alphabet(A) == "a:-1,b:0,c:1"
    assert parse_alphabet(" a:-1 , c:1 ") == binary_alphabet()
    with pytest.raises(ArityMismatchError):
        parse_alphabet("a-1,b:0")
    with pytest.raises(ArityMismatchError):
        parse_alphabet("a:x")


def test_tuple_text_form_round_trip():
    t = parse_tuple("3,1,2")
    assert t == DegreeTuple((3, 1, 2))
    assert t.total == 6
    assert format_tuple(t) == "3,1,2"
    assert format_tuple((3, 1, 2)) == "3,1,2"
    with pytest.raises(ArityMismatchError):
        parse_tuple("3,,2")
    with pytest.raises(ArityMismatchError):
        parse_tuple("3,-1")


def test_word_text_form(motzkin):
    w = motzkin.parse_word("cacbaba")
    assert w == (2, 0, 2, 1, 0, 1, 0)
    assert motzkin.format_word(w) == "cacbaba"
    assert motzkin.parse_word("") == ()
    with pytest.raises(ArityMismatchError):
        motzkin.parse_word("caz")
    with pytest.raises(ArityMismatchError):
        motzkin.index("z")
    assert motzkin.index("b") == 1


def test_is_f_valid(motzkin, binary):
    assert is_f_valid((3, 1, 2), motzkin)
    assert is_f_valid(DegreeTuple((1, 0, 0)), motzkin)  # unused letters allowed
    assert not is_f_valid((1, 1, 1), motzkin)
    assert is_f_valid((3, 2), binary)
    assert not is_f_valid((2, 2), binary)
    with pytest.raises(ArityMismatchError):
        is_f_valid((3, 1), motzkin)


def test_degree_tuple_validation():
    with pytest.raises(ArityMismatchError):
        DegreeTuple((1, -1))
    with pytest.raises(ArityMismatchError):
        DegreeTuple(())
    assert len(DegreeTuple((0, 2))) == 2
    assert list(DegreeTuple((0, 2))) == [0, 2]
