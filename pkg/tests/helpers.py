"""Shared helpers for the test modules."""
import io
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from gentle_strings.cli import main
from gentle_strings.fileformats import fixture_path, load_presentation
from gentle_strings.strings import parse_string

GOLDEN = Path(__file__).parent / "golden"
FIXTURES = fixture_path("")

# criterion number -> "criterion N: PASS ..." line, printed at session end
ACCEPTANCE_LINES: dict[int, str] = {}


def fixture(name):
    return load_presentation(fixture_path(f"{name}.alg"))


def s(p, text):
    return parse_string(p, text)


def fx(name) -> str:
    return str(fixture_path(name))


def run_cli(*argv):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main([str(a) for a in argv])
    return code, out.getvalue(), err.getvalue()


def check_golden(name, text, update=False):
    path = GOLDEN / name
    if update:
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8"), f"output differs from {path}"


def _local_relation_sets(ins, outs):
    """Subsets R of ins x outs that keep every arrow gentle at this vertex."""
    from itertools import combinations

    cells = [(a, b) for a in ins for b in outs]
    found = []
    for k in range(len(cells) + 1):
        for rel in combinations(cells, k):
            ok = all(len(outs) - 1 <= sum(x == a for x, _ in rel) <= 1 for a in ins)
            ok = ok and all(len(ins) - 1 <= sum(y == b for _, y in rel) <= 1 for b in outs)
            if ok:
                found.append(list(rel))
    return found


def random_gentle(rng, nv=4, na=5, tries=50):
    """A random gentle presentation: random arrows of in/out degree <= 2, then
    at each vertex a random admissible choice of relations; retried until the
    algebra is finite dimensional."""
    from gentle_strings.algebra import AlgebraPresentation

    for _ in range(tries):
        vs = [str(v) for v in range(1, nv + 1)]
        arrows = []
        outd = {v: 0 for v in vs}
        ind = {v: 0 for v in vs}
        for k in range(na):
            cand = [(a, b) for a in vs for b in vs if outd[a] < 2 and ind[b] < 2]
            if not cand:
                break
            a, b = rng.choice(cand)
            outd[a] += 1
            ind[b] += 1
            arrows.append((f"x{k}", a, b))
        rels = []
        for v in vs:
            ins = [a[0] for a in arrows if a[2] == v]
            outs = [a[0] for a in arrows if a[1] == v]
            rels += rng.choice(_local_relation_sets(ins, outs))
        p = AlgebraPresentation.build(vs, arrows, rels)
        if p.is_gentle:
            return p
    return None


def gentle_algebras():
    from hypothesis import assume, strategies as st

    @st.composite
    def build(draw):
        rng = draw(st.randoms(use_true_random=False))
        nv = draw(st.integers(1, 4))
        na = draw(st.integers(0, 5))
        p = random_gentle(rng, nv, na)
        assume(p is not None)
        return p

    return build()
