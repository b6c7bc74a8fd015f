import random

from xq.words import (concat_words, invert_word, reduce_word, word_from_pairs,
                      word_to_pairs)


def test_reduce_cancels_adjacent_inverses():
    assert reduce_word([(0, 1), (0, -1)]) == ()
    assert reduce_word([(0, 1), (1, 1), (1, -1), (0, -1)]) == ()
    assert reduce_word([(0, 1), (1, -1), (0, 1)]) == ((0, 1), (1, -1), (0, 1))


def test_reduce_is_idempotent_and_invert_is_involutive():
    rng = random.Random(0)
    for _ in range(500):
        w = [(rng.randrange(3), rng.choice((1, -1)))
             for _ in range(rng.randint(0, 12))]
        r = reduce_word(w)
        assert reduce_word(r) == r
        assert reduce_word(invert_word(invert_word(r))) == r
        assert reduce_word(concat_words(r, invert_word(r))) == ()


def test_pairs_round_trip():
    rng = random.Random(1)
    for _ in range(300):
        w = reduce_word((rng.randrange(3), rng.choice((1, -1)))
                        for _ in range(rng.randint(0, 10)))
        pairs = word_to_pairs(w)
        assert reduce_word(word_from_pairs(pairs)) == w
        # runs are collapsed: consecutive pairs never share a generator
        for (a, _), (b, _) in zip(pairs, pairs[1:]):
            assert a != b


def test_word_from_pairs_splits_exponents():
    assert word_from_pairs([(0, 3)]) == ((0, 1),) * 3
    assert word_from_pairs([(1, -2)]) == ((1, -1),) * 2
    assert word_from_pairs([(0, 0)]) == ()
