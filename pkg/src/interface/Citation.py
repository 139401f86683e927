from dataclasses import dataclass

# 引用字符串：所有"断言而非计算"的事实都必须带上其中之一
KNOT_SURGERY = "[FS-knots] knot surgery: X_K homeomorphic to X, SW_{X_K} = SW_X * Delta_K(exp(2[T]))"
TAUBES = "[Taubes] SW of the canonical class of a symplectic 4-manifold is +-1"
MST = "[MST] gluing formula: SW_{Z_K}(k) = sum_R SW(k+2[R]) = +-SW_{X_K}(2G T) * SW_Y(2G F)"
RIM_TORI = "[rim tori] each rim torus is homologically trivial in Z_K"
SIMPLE_TYPE = "[FS] basic classes orthogonal to the (-2)-spheres of 2E8: Z_K has simple type"
PI1_ZK = "[pi1] Z_K is simply connected (Kirby calculus on the gluing region)"
SPIN_GLUING = "[Gompf] the fiber sum along Sigma'=C can be performed so that Z_K is spin"
CANONICAL_SUM = "[Gompf] canonical class of a symplectic fiber sum along a torus: K_A + K_B + 2[N]"
THURSTON = "[Thurston] S^1 x M_K of a fibered knot is symplectic"
ELLIPTIC_SW = "external input: SW_{E(2n)} = (t - t^-1)^(2n-2), t = exp([T])"
K3_SIMPLY_CONNECTED = "K3 / E(2n): simply connected elliptic surfaces, SW_{K3} = 1"
HOMOLOGY_S1XM = "S^1 x M_K' has the homology of S^2 x T^2"
ADJUNCTION = "[MST] adjunction inequality: 2g_B - 2 >= [B]^2 + |k.[B]| for [B]^2 >= 0"
NONSYMPLECTIC_REVERSED = "Z_K contains an embedded sphere of self-intersection -2"

@dataclass(frozen=True)
class Assertion:
    """被断言（而非被计算）的事实及其引用"""
    fact: str
    citation: str

    def to_dict(self) -> dict:
        return {"fact": self.fact, "citation": self.citation}
