namespace atominfo::detail {

// Ground-state configurations of the neutral atoms, Z = 1..105. Same grammar
// as external configuration files. Anomalous fillings (Cr, Cu, Nb, Mo, Ru,
// Rh, Pd, Ag, La, Ce, Gd, Pt, Au, Ac, Th, Pa, U, Np, Cm, Lr, ...) follow the
// accepted experimental assignments.
extern const char kGroundStateTable[] = R"(
1 H 1s1
2 He 1s2
3 Li 1s2 2s1
4 Be 1s2 2s2
5 B 1s2 2s2 2p1
6 C 1s2 2s2 2p2
7 N 1s2 2s2 2p3
8 O 1s2 2s2 2p4
9 F 1s2 2s2 2p5
10 Ne 1s2 2s2 2p6
11 Na 1s2 2s2 2p6 3s1
12 Mg 1s2 2s2 2p6 3s2
13 Al 1s2 2s2 2p6 3s2 3p1
14 Si 1s2 2s2 2p6 3s2 3p2
15 P 1s2 2s2 2p6 3s2 3p3
16 S 1s2 2s2 2p6 3s2 3p4
17 Cl 1s2 2s2 2p6 3s2 3p5
18 Ar 1s2 2s2 2p6 3s2 3p6
19 K 1s2 2s2 2p6 3s2 3p6 4s1
20 Ca 1s2 2s2 2p6 3s2 3p6 4s2
21 Sc 1s2 2s2 2p6 3s2 3p6 3d1 4s2
22 Ti 1s2 2s2 2p6 3s2 3p6 3d2 4s2
23 V 1s2 2s2 2p6 3s2 3p6 3d3 4s2
24 Cr 1s2 2s2 2p6 3s2 3p6 3d5 4s1
25 Mn 1s2 2s2 2p6 3s2 3p6 3d5 4s2
26 Fe 1s2 2s2 2p6 3s2 3p6 3d6 4s2
27 Co 1s2 2s2 2p6 3s2 3p6 3d7 4s2
28 Ni 1s2 2s2 2p6 3s2 3p6 3d8 4s2
29 Cu 1s2 2s2 2p6 3s2 3p6 3d10 4s1
30 Zn 1s2 2s2 2p6 3s2 3p6 3d10 4s2
31 Ga 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p1
32 Ge 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p2
33 As 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p3
34 Se 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p4
35 Br 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p5
36 Kr 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6
37 Rb 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 5s1
38 Sr 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 5s2
39 Y 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d1 5s2
40 Zr 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d2 5s2
41 Nb 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d4 5s1
42 Mo 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d5 5s1
43 Tc 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d5 5s2
44 Ru 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d7 5s1
45 Rh 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d8 5s1
46 Pd 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10
47 Ag 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s1
48 Cd 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2
49 In 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p1
50 Sn 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p2
51 Sb 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p3
52 Te 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p4
53 I 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p5
54 Xe 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6
55 Cs 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 6s1
56 Ba 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 6s2
57 La 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 5d1 6s2
58 Ce 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f1 5d1 6s2
59 Pr 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f3 6s2
60 Nd 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f4 6s2
61 Pm 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f5 6s2
62 Sm 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f6 6s2
63 Eu 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f7 6s2
64 Gd 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f7 5d1 6s2
65 Tb 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f9 6s2
66 Dy 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f10 6s2
67 Ho 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f11 6s2
68 Er 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f12 6s2
69 Tm 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f13 6s2
70 Yb 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 6s2
71 Lu 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d1 6s2
72 Hf 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d2 6s2
73 Ta 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d3 6s2
74 W 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d4 6s2
75 Re 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d5 6s2
76 Os 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d6 6s2
77 Ir 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d7 6s2
78 Pt 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d9 6s1
79 Au 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s1
80 Hg 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2
81 Tl 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p1
82 Pb 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p2
83 Bi 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p3
84 Po 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p4
85 At 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p5
86 Rn 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6
87 Fr 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 7s1
88 Ra 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 7s2
89 Ac 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 6d1 7s2
90 Th 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 6d2 7s2
91 Pa 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f2 6d1 7s2
92 U 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f3 6d1 7s2
93 Np 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f4 6d1 7s2
94 Pu 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f6 7s2
95 Am 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f7 7s2
96 Cm 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f7 6d1 7s2
97 Bk 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f9 7s2
98 Cf 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f10 7s2
99 Es 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f11 7s2
100 Fm 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f12 7s2
101 Md 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f13 7s2
102 No 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f14 7s2
103 Lr 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f14 7s2 7p1
104 Rf 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f14 6d2 7s2
105 Db 1s2 2s2 2p6 3s2 3p6 3d10 4s2 4p6 4d10 5s2 5p6 4f14 5d10 6s2 6p6 5f14 6d3 7s2
)";

}  // namespace atominfo::detail
