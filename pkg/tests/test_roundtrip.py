import itertools

from egdp.qdb.database import Database, parse_database, parse_relation
from egdp.textformat import format_egdp
from egdp.verify.generate import Bounds, binary_scheme, gen_random, unary_scheme


def generated(count):
    schemes = [unary_scheme(3), binary_scheme(2, 2)]
    per = count // len(schemes)
    for i, s in enumerate(schemes):
        yield from itertools.islice(gen_random(s, Bounds(3, 3, 3), seed=100 + i, normalize=False), per)


def test_parse_format_identity():
    rels = list(generated(500))
    assert len(rels) == 500
    for r in rels:
        text = format_egdp(r)
        back = parse_relation(text, r.scheme)
        assert back == r
        assert format_egdp(back) == text


def test_database_round_trip():
    db = Database()
    db.add_scheme("U", unary_scheme(3))
    db.add_scheme("B", binary_scheme(2, 2))
    for i, r in enumerate(itertools.islice(gen_random(unary_scheme(3), Bounds(), seed=1), 20)):
        db.add_relation(f"R{i}", "U", r)
    for i, r in enumerate(itertools.islice(gen_random(binary_scheme(2, 2), Bounds(), seed=2), 20)):
        db.add_relation(f"Q{i}", "B", r)
    text = db.format()
    again = parse_database(text)
    assert again.relations == db.relations
    assert again.format() == text
    assert not again.warnings
