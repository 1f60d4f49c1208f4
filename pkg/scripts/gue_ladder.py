"""|ln S - sqrt(N) E h - S h^2/2| along the corrected (1-t)/2 family."""
import mpmath as mp

from schurasym.suites import gue_ladder
from _csvout import parser, write

if __name__ == "__main__":
    p = parser(__doc__, "gue_ladder.csv")
    p.add_argument("--Ns", default="64,128,256,512")
    a = p.parse_args()
    Ns = tuple(int(v) for v in a.Ns.split(","))
    with mp.workprec(128):
        rows = gue_ladder(Ns)
    write(a.out, ("N", "h", "error"), rows, {"Ns": Ns, "profile": "halfstair"})
