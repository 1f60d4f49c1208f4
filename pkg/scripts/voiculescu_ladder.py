"""Max error of S_lambda(N)(x; N, 1) against its Voiculescu limit, per family and N."""
from schurasym.charlimits import voiculescu_ladder
from _csvout import parser, write

if __name__ == "__main__":
    p = parser(__doc__, "voiculescu_ladder.csv")
    p.add_argument("--Ns", default="50,100,200,400")
    a = p.parse_args()
    Ns = tuple(int(v) for v in a.Ns.split(","))
    rows = []
    for name in ("alpha", "beta", "gamma"):
        rows += [(name, "limit", N, f"{e:.6e}") for N, e in voiculescu_ladder(name, Ns)]
    rows += [("gamma", "finite-delta", N, f"{e:.6e}") for N, e in voiculescu_ladder("gamma", Ns, finite_gamma=True)]
    write(a.out, ("family", "target", "N", "error"), rows, {"Ns": Ns})
