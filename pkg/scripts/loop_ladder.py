"""L * X(z) for the dense loop model against i sqrt(3)/4 (z^3 - z^-3)."""
import mpmath as mp

from schurasym import loop
from _csvout import parser, write

if __name__ == "__main__":
    p = parser(__doc__, "loop_ladder.csv")
    p.add_argument("--Ls", default="8,12,16,20,24")
    p.add_argument("--z", default="2")
    a = p.parse_args()
    Ls = tuple(int(v) for v in a.Ls.split(","))
    z = mp.mpf(a.z)
    rows = []
    for L in Ls:
        x = loop.current("X", loop.LoopParams(L=L), z)
        pred = L * loop.current_prediction(z, L)
        rows.append((L, a.z, mp.nstr(L * x, 12), mp.nstr(pred, 12), mp.nstr(abs(L * x - pred), 6)))
    write(a.out, ("L", "z", "L*X", "prediction", "error"), rows, {"Ls": Ls, "z": a.z})
