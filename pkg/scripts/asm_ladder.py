"""Gaussian ASM observable: (n, s, error) against exp(-3 s^2 / 16)."""
from schurasym.asm import asm_gaussian_check
from _csvout import parser, write

if __name__ == "__main__":
    p = parser(__doc__, "asm_ladder.csv")
    p.add_argument("--ns", default="64,128,256,512")
    p.add_argument("--s", default="0.25,0.5,1")
    a = p.parse_args()
    ns = tuple(int(v) for v in a.ns.split(","))
    ss = tuple(float(v) for v in a.s.split(","))
    rep = asm_gaussian_check(ns, ss)
    write(a.out, ("n", "s", "error", "phase", "prec", "loss_bits"), rep.rows, {"ns": ns, "s": ss})
