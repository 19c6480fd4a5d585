"""Reference expressions transcribed from published worked examples.

Strings use the package text syntax (implicit multiplication, ^ for powers).
Capital and lower-case letters are both accepted by the parser. Tables that
fix an obvious misprint hold the corrected form; the literal printed form, if
kept, has a name ending in ``_AS_PRINTED``.
"""

# sl2 ------------------------------------------------------------------------

SL2_TAU1 = "(x1+x2)(x2+x3)/(x2(x1+x2+x3))"
SL2_TAU2 = "(x2+x3)(x3+x4)/(x3(x2+x3+x4))"
SL2_TAU3 = "(x3+x4)(x4+x5)/(x4(x3+x4+x5))"

SL2_F2 = "2X1X2^2X3^2X4(X1+X2+X3+X4)/((X1+X2)^2(X2+X3)^3(X3+X4)^2)"
SL2_F3 = "-2X1X2X3^2X4X5/((X1+X2)(X2+X3)^2(X3+X4)^2(X4+X5))"

# decompositions, as polynomials in t1, t2, t3
SL2_DECOMP = {
    2: "2(1-t1)(1-t2)(-1+t1+t2)",
    3: "-2(1-t1)(1-t2)(1-t3)",
}

SL2_D = {"x1": "x1(x1+2x2+2x3)", "x2": "x2(x2+2x3)", "x3": "x3^2"}
SL2_H = {"x1": "x1", "x2": "x2", "x3": "x3"}

# sl3 ------------------------------------------------------------------------

SL3_TAUS_INVERSE = [
    "X2Y2(X3Y3+X2(Y2+Y3)+X1(Y1+Y2+Y3))/((X2Y2+X1(Y1+Y2))(X3Y3+X2(Y2+Y3)))",
    "X3Y2(X2Y1+(X3+X4)(Y1+Y2)+X4Y3)/((X2Y1+X3(Y1+Y2))(X3Y2+X4(Y2+Y3)))",
    "X3y3(X4Y4+X3(Y3+Y4)+X2(Y2+Y3+Y4))/((X3Y3+X2(Y2+Y3))(X4Y4+X3(Y3+Y4)))",
    "X4Y3(X3Y2+(X4+X5)(Y2+Y3)+X5Y4)/((X3Y2+X4(Y2+Y3))(X4Y3+X5(Y3+Y4)))",
    "X4Y4(X5Y5+X4(Y4+Y5)+X3(Y3+Y4+Y5))/((X4Y4+X3(Y3+Y4))(X5Y5+X4(Y4+Y5)))",
    "X5Y4(X4Y3+(X5+X6)(Y3+Y4)+X6Y5)/((X4Y3+X5(Y3+Y4))(X5Y4+X6(Y4+Y5)))",
]

SL3_DECOMP = {
    2: "-(1-t1)(1-t2)(t1t2)",
    3: "(1-t1)(1-t3)(t1t2+t2t3-t2)",
    4: "-(1-t1)(1-t4)(t1t2+t2t3+t3t4-t1-t2-t3-t4+1)",
    5: "(1-t1)(1-t5)(t2t3+t3t4-t2-t3-t4+1)",
    6: "-(1-t1)(1-t6)(t3t4-t4-t3+1)",
}

# operator tables: target variable -> coefficient polynomial
SL3_DX = {"x1": "x1(x1+2x2+2x3)", "x2": "x2(x2+2x3)", "x3": "x3^2",
          "y1": "-y1(x2+x3)", "y2": "-y2x3"}
SL3_DY = {"y1": "y1(y1+2y2+2y3)", "y2": "y2(y2+2y3)", "y3": "y3^2",
          "x1": "-x1(y1+y2+y3)", "x2": "-x2(y2+y3)", "x3": "-x3y3"}
SL3_HX = {"x1": "2x1", "x2": "2x2", "x3": "2x3", "y1": "-y1", "y2": "-y2", "y3": "-y3"}
SL3_HY = {"x1": "-x1", "x2": "-x2", "x3": "-x3", "y1": "2y1", "y2": "2y2", "y3": "2y3"}

# the four-line PDE system as printed (first and third lines)
SL3_DX_AS_PRINTED = {"x1": "x1(x1+2x2+2x3)", "x2": "x2(x2+2x3)+x3^2",
                     "y1": "-y1(x1+x2+x3)", "y2": "-y2(x2+x3)", "y3": "-y3x3"}
SL3_DY_AS_PRINTED = {"y1": "y1(y1+2y2+2y3)-y1(x1+x2+x3)", "y2": "y2(y2+2y3)+y3^2-y2(x2+x3)",
                     "y3": "-y3x3"}

# a second first integral of the sl3 system, in its original variables
SL3_ALT_INTEGRAL = "(x2 y2 (x3 y3 + x2 (y2 + y3) + x1 (y1 + y2 + y3)))/(x1 (x2 y1 + x3 (y1 + y2)) y3)"

# Reduced sl3 operators in ratios v2=x2/x1, v3=x3/x1, w2=y2/y1, w3=y3/y1.
# Written with v -> x and w -> y so that they parse as lattice variables.
SL3_REDUCED = {
    "e5": {"y3": "(x2+x3)y3", "y2": "x2y2", "x3": "-x3(1+2x2+x3)", "x2": "-x2(1+x2)"},
    "e6": {"y3": "-y3(1+2y2+y3)", "y2": "-y2(1+y2)", "x3": "x3(1+y2)", "x2": "x2"},
    "e7": {"y3": "-y3(x3(1+y2+y3)+x2(1+2y2+y3))", "y2": "-x2y2(1+y2)",
           "x3": "x3(x3(1+y2)+x2(2+y2))", "x2": "x2^2"},
}
SL3_REDUCED_INTEGRAL = "(x2 y2 (1 + (1 + x2) y2 + (1 + x2 + x3) y3))/((x2 + x3 + x3 y2) y3)"

# sl4 ------------------------------------------------------------------------

SL4_D = {
    0: {"x1": "x1(x1+2x2+2x3)", "x2": "x2(x2+2x3)", "x3": "x3^2", "y1": "-y1(x2+x3)", "y2": "-y2x3"},
    1: {"y1": "y1(y1+2y2+2y3)", "y2": "y2(y2+2y3)", "y3": "y3^2", "x1": "-x1(y1+y2+y3)",
        "x2": "-x2(y2+y3)", "x3": "-x3y3", "z1": "-z1(y2+y3)", "z2": "-z2y3"},
    2: {"z1": "z1(z1+2z2+2z3)", "z2": "z2(z2+2z3)", "z3": "z3^2", "y1": "-y1(z1+z2+z3)",
        "y2": "-y2(z2+z3)", "y3": "-y3z3"},
}
SL4_H = {
    0: {"x1": "2x1", "x2": "2x2", "x3": "2x3", "y1": "-y1", "y2": "-y2", "y3": "-y3"},
    1: {"y1": "2y1", "y2": "2y2", "y3": "2y3", "x1": "-x1", "x2": "-x2", "x3": "-x3",
        "z1": "-z1", "z2": "-z2", "z3": "-z3"},
    2: {"z1": "2z1", "z2": "2z2", "z3": "2z3", "y1": "-y1", "y2": "-y2", "y3": "-y3"},
}

# first integral found by elimination (a function of the generator)
SL4_ELIMINATION_INTEGRAL = (
    "-(((x2 y2 z2 + x1 (y2 z2 + y1 (z1 + z2))) (x3 y3 z3 + x2 (y3 z3 + y2 (z2 + z3))))/"
    "(x2 y2 z2 (x3 y3 z3 + x2 (y3 z3 + y2 (z2 + z3)) + x1 (y3 z3 + y2 (z2 + z3) + y1 (z1 + z2 + z3)))))"
)

# Reduced sl4 operators in ratios v=x/x1, w=y/y1, k=z/z1, written as x, y, z.
SL4_REDUCED = {
    "e4": {"y3": "(x2+x3)y3", "y2": "x2y2", "x3": "-x3(1+2x2+x3)", "x2": "-x2(1+x2)"},
    "e5": {"z3": "z3(y2+y3)", "z2": "z2y2", "y3": "-y3(1+2y2+y3)", "y2": "-y2(1+y2)",
           "x3": "x3(1+y2)", "x2": "x2"},
    "e6": {"z3": "-z3(1+2z2+z3)", "z2": "-z2(1+z2)", "y3": "(1+z2)y3", "y2": "y2"},
    "e7": {"z3": "z3x2y2+z3(x2+x3)y3", "z2": "z2x2y2", "y3": "-y3(x3(1+y2+y3)+x2(1+2y2+y3))",
           "y2": "-x2y2(1+y2)", "x3": "x3(x3(1+y2)+x2(2+y2))", "x2": "x2^2"},
    "e8": {"z3": "-z3((1+2z2+z3)y2+(1+z2+z3)y3)", "z2": "-z2(1+z2)y2",
           "y3": "y3((2+z2)y2+(1+z2)y3)", "y2": "y2^2", "x3": "-x3y2"},
}

SL4_K = [
    "((x1 y1 z1 + x2 y2 z2 + x1 (y1 + y2) z2) (x2 y2 z2 +  x3 y3 z3 + x2 (y2 + y3) z3))/(x2 y2 z2 (x2 y2 z2 + x3 y3 z3 + x2 (y2 + y3) z3 + x1 (y2 z2 + (y2 + y3) z3 + y1 (z1 + z2 + z3))))",
    "(((x2 + x3) y1 z1 + x3 (y1 + y2) z2) ((x3 + x4) y2 z2 + x4 (y2 + y3) z3))/(x3 y2 z2 (x2 y1 z1 + (x3 + x4) (y2 z2 + y1 (z1 + z2)) + x4 (y1 + y2 + y3) z3))",
    "((x2 (y2 + y3) z1 + x3 y3 (z1 + z2)) (x3 (y3 + y4) z2 + x4 y4 (z2 + z3)))/(x3 y3 z2 (x2 (y2 + y3 + y4) z1 + x3 (y3 + y4) (z1 + z2) + x4 y4 (z1 + z2 + z3)))",
    "((x2 y2 z2 + x3 y3 z3 + x2 (y2 + y3) z3) (x3 y3 z3 +  x4 y4 z4 + x3 (y3 + y4) z4))/(x3 y3 z3 (x3 y3 z3 + x4 y4 z4 +  x3 (y3 + y4) z4 + x2 (y3 z3 + (y3 + y4) z4 + y2 (z2 + z3 + z4))))",
    "(((x3 + x4) y2 z2 + x4 (y2 + y3) z3) ((x4 + x5) y3 z3 + x5 (y3 + y4) z4))/(x4 y3 z3 (x3 y2 z2 + (x4 + x5) (y3 z3 + y2 (z2 + z3)) + x5 (y2 + y3 + y4) z4))",
    "((x3 (y3 + y4) z2 + x4 y4 (z2 + z3)) (x4 (y4 + y5) z3 +  x5 y5 (z3 + z4)))/(x4 y4 z3 (x3 (y3 + y4 + y5) z2 + x4 (y4 + y5) (z2 + z3) + x5 y5 (z2 + z3 + z4)))",
    "((x3 y3 z3 + x4 y4 z4 + x3 (y3 + y4) z4) (x4 y4 z4 + x5 y5 z5 + x4 (y4 + y5) z5))/(x4 y4 z4 (x4 y4 z4 + x5 y5 z5 + x4 (y4 + y5) z5 + x3 (y4 z4 + (y4 + y5) z5 + y3 (z3 + z4 + z5))))",
    "(((x4 + x5) y3 z3 + x5 (y3 + y4) z4) ((x5 + x6) y4 z4 + x6 (y4 + y5) z5))/(x5 y4 z4 (x4 y3 z3 + (x5 + x6) (y4 z4 + y3 (z3 + z4)) + x6 (y3 + y4 + y5) z5))",
    "((x4 (y4 + y5) z3 + x5 y5 (z3 + z4)) (x5 (y5 + y6) z4 + x6 y6 (z4 + z5)))/(x5 y5 z4 (x4 (y4 + y5 + y6) z3 + x5 (y5 + y6) (z3 + z4) + x6 y6 (z3 + z4 + z5)))",
]

SL4_F9 = (
    "(2 x1 x2 x5 y2 y5 y6 z2 (x2 y1 y2 z1 + x2 y1 y3 z1 + x3 y1 y3 z1 + x2 y1 y3 z2 + x3 y1 y3 z2 + x3 y2 y3 z2)"
    " z3^2 z4 (x4 x5 y4 z4 + x4 x6 y4 z4 + x4 x6 y5 z4 + x4 x6 y4 z5 + x4 x6 y5 z5 + x5 x6 y5 z5))/"
    "((x1 y1 z1 + x1 y1 z2 + x1 y2 z2 + x2 y2 z2) (x2 y2 z2 + x2 y2 z3 + x2 y3 z3 +  x3 y3 z3)^2"
    " (x4 y4 z3 + x4 y5 z3 + x5 y5 z3 + x5 y5 z4)^2 (x5 y5 z4 + x5 y6 z4 + x6 y6 z4 + x6 y6 z5))"
)

# sl5 ------------------------------------------------------------------------

SL5_D = {
    0: {"x1": "x1(x1+2x2+2x3)", "x2": "x2(x2+2x3)", "x3": "x3^2", "y1": "-y1(x2+x3)", "y2": "-y2x3"},
    1: {"y1": "y1(y1+2y2+2y3)", "y2": "y2(y2+2y3)", "y3": "y3^2", "x1": "-x1(y1+y2+y3)",
        "x2": "-x2(y2+y3)", "x3": "-x3y3", "z1": "-z1(y2+y3)", "z2": "-z2y3"},
    2: {"z1": "z1(z1+2z2+2z3)", "z2": "z2(z2+2z3)", "z3": "z3^2", "y1": "-y1(z1+z2+z3)",
        "y2": "-y2(z2+z3)", "y3": "-y3z3", "k1": "-k1(z2+z3)", "k2": "-k2z3"},
    # printed with d/dz3 on the k3^2 term and z3x3 for z3k3
    3: {"k1": "k1(k1+2k2+2k3)", "k2": "k2(k2+2k3)", "k3": "k3^2", "z1": "-z1(k1+k2+k3)",
        "z2": "-z2(k2+k3)", "z3": "-z3k3"},
}
SL5_H = {
    0: {"x1": "2x1", "x2": "2x2", "x3": "2x3", "y1": "-y1", "y2": "-y2", "y3": "-y3"},
    1: {"y1": "2y1", "y2": "2y2", "y3": "2y3", "x1": "-x1", "x2": "-x2", "x3": "-x3",
        "z1": "-z1", "z2": "-z2", "z3": "-z3"},
    2: {"z1": "2z1", "z2": "2z2", "z3": "2z3", "y1": "-y1", "y2": "-y2", "y3": "-y3",
        "k1": "-k1", "k2": "-k2", "k3": "-k3"},
    3: {"k1": "2k1", "k2": "2k2", "k3": "2k3", "z1": "-z1", "z2": "-z2", "z3": "-z3"},
}

# decomposition problems with supplied generators ----------------------------

PROBLEM_F2 = (
    "-((2 x1 x2 x3 x4 y1 y2^2 y3 (x2 y1 + (x3 + x4) (y1 + y2) + x4 y3) (x3 y3 + x2 (y2 + y3) + x1 (y1 + y2 + y3)))/"
    "((x2 y2 + x1 (y1 + y2))^2 (x2 y1 + x3 (y1 + y2)) (x3 y3 + x2 (y2 + y3)) (x3 y2 + x4 (y2 + y3))^2))"
)
PROBLEM_F2_GENS = [
    "(x2 y2 (x3 y3 + x2 (y2 + y3) + x1 (y1 + y2 + y3)))/((x2 y2 + x1 (y1 + y2)) (x3 y3 + x2 (y2 + y3)))",
    "(x3 y2 (x2 y1 + (x3 + x4) (y1 + y2) + x4 y3))/((x2 y1 + x3 (y1 + y2)) (x3 y2 + x4 (y2 + y3)))",
]
PROBLEM_F2_ANSWER = "-2 (-1 + t1) t1 (-1 + t2) t2"
PROBLEM_F2_COEFFS = {(2, 1): 2, (1, 1): -2, (2, 2): -2, (1, 2): 2}

PROBLEM_F6 = (
    "(2 x1 x2 x5 x6 y2 (x2 y1 + x3 (y1 + y2)) y3^2 y4 (x5 y5 + x4 (y4 + y5)))/"
    "((x2 y2 + x1 (y1 + y2)) (x3 y3 + x2 (y2 + y3))^2 (x4 y3 + x5 (y3 + y4))^2 (x5 y4 + x6 (y4 + y5)))"
)
PROBLEM_F6_GENS = [
    "((x2 y2 + x1 (y1 + y2)) (x3 y3 + x2 (y2 + y3)))/(x2 y2 (x3 y3 + x2 (y2 + y3) + x1 (y1 + y2 + y3)))",
    "((x2 y1 + x3 (y1 + y2)) (x3 y2 +  x4 (y2 + y3)))/(x3 y2 (x2 y1 + (x3 + x4) (y1 + y2) + x4 y3))",
    "((x3 y3 + x2 (y2 + y3)) (x4 y4 + x3 (y3 + y4)))/(x3 y3 (x4 y4 +  x3 (y3 + y4) + x2 (y2 + y3 + y4)))",
    "((x3 y2 + x4 (y2 + y3)) (x4 y3 + x5 (y3 + y4)))/(x4 y3 (x3 y2 + (x4 + x5) (y2 + y3) + x5 y4))",
    "((x4 y4 + x3 (y3 + y4)) (x5 y5 + x4 (y4 + y5)))/(x4 y4 (x5 y5 + x4 (y4 + y5) + x3 (y3 + y4 + y5)))",
    "((x4 y3 + x5 (y3 + y4)) (x5 y4 + x6 (y4 + y5)))/(x5 y4 (x4 y3 + (x5 + x6) (y3 + y4) + x6 y5))",
]
PROBLEM_F6_ANSWER = "2 (-1 + t1) (-1 + t3) (-1 + t4) (-1 + t6) t1^-1 t3^-1 t4^-1 t6^-1"

# variable orders of the substitution checks, as (family letter, site) lists
SL3_ARG1 = "x1 x2 x3 x4 x5 x6 y1 y2 y3 y4 y5"
SL3_ARG2 = "x6 x5 x4 x3 x2 x1 y5 y4 y3 y2 y1"
SL4_ARG1 = "x1 x2 x3 x4 x5 x6 y1 y2 y3 y4 y5 y6 z1 z2 z3 z4 z5"
SL4_ARG3 = "y6 y5 y4 y3 y2 y1 x6 x5 x4 x3 x2 x1 z5 z4 z3 z2 z1"
