"""Reference values frozen from a 50-digit mpmath run, rounded to binary64.

The test points avoid symmetry axes so sign and conjugation slips cannot
cancel: TAU0 has nonzero real part, Z0 sits away from every half-period.
"""

TAU0 = complex(0.23, 1.11)
Z0 = complex(0.37, 0.29)
V0 = Z0 / 2.0

TAUN = complex(0.13, 1.07)
ZN = complex(0.31, 0.17)

# theta values at v = V0, tau = TAU0
TH1_V0 = complex(0.44004776032577637, 0.41380322709333161)
TH2_V0 = complex(0.80061250503732135, -0.074318222024530322)
TH3_V0 = complex(1.0650338830573268, -0.020688969650635788)
TH4_V0 = complex(0.93497539545397488, 0.020694523399322637)
TH1P_V0 = complex(2.4972698975730306, -0.23092794152337127)

# theta nulls and theta1 derivatives at v = 0, tau = TAU0
TH2_0 = complex(0.82275053001219680, 0.15105012596669170)
TH3_0 = complex(1.0458861657010965, 0.040456027098402841)
TH4_0 = complex(0.95411044300136384, -0.040455156361189629)
TH1P_0 = complex(2.5852873739702705, 0.46471927452301339)
TH1PPP_0 = complex(-25.547761677231032, -4.0051537901240793)

# lattice data at TAU0
E1 = complex(1.6495297968022582, 0.036652747111255394)
E2 = complex(-0.37314272354138607, 0.38282167564074949)
E3 = complex(-1.2763870732608722, -0.41947442275200488)
ETA1 = complex(0.82020263913270068, -0.018334967343743126)

# Weierstrass family at (Z0, TAU0)
WP = complex(1.0785669917591636, -4.2936600612322099)
WPP = complex(8.1626650346265550, 17.923012519820452)
ZETA = complex(1.6837272415232446, -1.3242485352488191)
SIGMA = complex(0.37076604393598974, 0.29033978378204707)
SIGMA1 = complex(0.96709973859554636, -0.18259236561505790)
SIGMA2 = complex(1.0416130082977618, 0.030672566165307725)
SIGMA3 = complex(0.99114641818973414, 0.15185512339187003)

# sigma quotients at (Z0, TAU0)
XI10 = complex(1.3778296814592087, -1.5714252881231991)
XI21 = complex(1.0341941639584285, 0.22697609802536152)
XI03 = complex(0.40934975938846221, 0.23021616319456846)

# moduli
K_TAU0 = complex(0.61281498262147650, 0.18008275236254564)
KP_TAU0 = complex(0.82154246153424051, -0.13432952516341914)
K_13I = 0.48606157612229516
KP_13I = 0.87392456437470063

# square lattice tau = i
TH2_0_I = 0.91357913815611682
TH3_0_I = 1.0864348112133080
TH4_0_I = 0.91357913815611682
E1_I = 1.7187964545050932
WP_HALF_I = 4.1495417114249865
K_I = 0.70710678118654752  # 2^{-1/2}; nearest double is math.sqrt(0.5)

# tau = 1.3i branch values
E1_13I = 1.6561311391047705
E3_13I = -1.1608269971438135
# (1.3i)^2 * e3(1.3i), the S-transformed branch value
E1_INV_13I = 1.9617976251730448

# order-3 transform spots: arguments (3*ZN, 3*TAUN)
WP_3Z_3TAU = complex(0.54938862559181619, -0.20241945407663706)
XI21_3Z_3TAU = complex(0.18311956233350310, 1.1004652577786589)
SIGMA_3Z_3TAU = complex(0.97416716824537873, 0.48671321729958680)
K_3TAU = complex(0.021139372421774015, 0.014852041772897391)
ETA1_3TAU = complex(0.82246705989775305, -2.1900899395934208e-8)

# (ZN, TAUN) spots used by the transform tests
WP_ZN_TAUN = complex(4.3245988667179088, -6.6867771953057265)
E1_TAUN = complex(1.6774388239899133, 0.034675283797143202)
E1_3TAUN = complex(1.6449340139009467, 4.3801799026851099e-8)

# wp'(0.4 + 0.2i) at tau = 1.1i
WPP_Z4_11I = complex(-3.5985695098782186, 22.235027239450306)

# full reciprocal-sine lattice sum S(Z0) at TAU0, sign +1
SSUM_Z0 = complex(0.68636108363266192, -0.20950953883350759)
