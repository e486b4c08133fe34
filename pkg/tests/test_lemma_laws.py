from helpers import b_prefix_law, lemma1_law, lemma8_law, prefix_independence_law


def test_lemma1_law():
    assert lemma1_law() == 200


def test_lemma8_law():
    assert lemma8_law() >= 24


def test_prefix_independence():
    assert prefix_independence_law() == 200


def test_b_prefix_law():
    assert b_prefix_law() == 200
