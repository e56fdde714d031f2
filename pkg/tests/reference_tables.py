"""Published reference values, typed in by hand.  Nothing here is computed."""

NARAYANA_D2 = [
    [1],
    [1, 1],
    [1, 3, 1],
    [1, 6, 6, 1],
    [1, 10, 20, 10, 1],
    [1, 15, 50, 50, 15, 1],
    [1, 21, 105, 175, 105, 21, 1],
    [1, 28, 196, 490, 490, 196, 28, 1],
]

NARAYANA_D3 = [
    [1],
    [1, 1],
    [1, 4, 1],
    [1, 9, 10, 1],
    [1, 16, 42, 20, 1],
    [1, 25, 120, 140, 35, 1],
    [1, 36, 275, 600, 378, 56, 1],
    [1, 49, 546, 1925, 2310, 882, 84, 1],
]

CATALAN = {
    2: [1, 2, 5, 14, 42, 132, 429, 1430],
    3: [1, 2, 6, 21, 80, 322, 1347, 5798],
    4: [1, 2, 7, 29, 131, 627, 3124, 16032],
    5: [1, 2, 8, 38, 196, 1073, 6120, 35968],
    6: [1, 2, 9, 48, 276, 1687, 10750, 70597],
}

# ternary monomials with three operations, grouped by number of L's
TERNARY_TOPT3 = {
    0: ["a1a2a3a4a5a6a7"],
    1: [
        "L(a1a2a3a4a5)", "L(a1a2a3)a4a5", "L(a1)a2a3a4a5", "a1L(a2a3a4)a5",
        "a1L(a2)a3a4a5", "a1a2L(a3a4a5)", "a1a2L(a3)a4a5", "a1a2a3L(a4)a5",
        "a1a2a3a4L(a5)",
    ],
    2: [
        "L^2(a1a2a3)", "L(L(a1)a2a3)", "L^2(a1)a2a3", "L(a1L(a2)a3)",
        "L(a1a2L(a3))", "L(a1)L(a2)a3", "L(a1)a2L(a3)", "a1L^2(a2)a3",
        "a1L(a2)L(a3)", "a1a2L^2(a3)",
    ],
    3: ["L^3(a1)"],
}

# the twelve members of P_3 on [5], in listed order
PERMS_P3_5 = [
    "54321", "54123", "53124", "43125", "52134", "42135",
    "32145", "15423", "15324", "14325", "12543", "12345",
]

# the twelve trees of T_3 with five edges (preorder outdegrees), same order;
# tree i maps to permutation i through the tree -> Dyck -> permutation maps
TREES_T3_5 = [
    (5, 0, 0, 0, 0, 0), (3, 1, 1, 0, 0, 0), (3, 1, 0, 1, 0, 0), (3, 1, 0, 0, 1, 0),
    (3, 0, 1, 1, 0, 0), (3, 0, 1, 0, 1, 0), (3, 0, 0, 1, 1, 0), (1, 3, 1, 0, 0, 0),
    (1, 3, 0, 1, 0, 0), (1, 3, 0, 0, 1, 0), (1, 1, 3, 0, 0, 0), (1, 1, 1, 1, 1, 0),
]

# d = 3 worked pairings: monomial -> F-path -> labelled Dyck path -> labelled tree
TERNARY_TOPT2_CHAIN = [
    ("a1a2a3a4a5", "(1,1)[0,0] (1,1)[0,0]", "UD(0,0)UD(0,0)UD", "1 1 1 0;(0,0);(0,0)"),
    ("L(a1a2a3)", "(1,1)[0,0] (0,1)", "UD(0,0)UUDD", "2 0 1 0;(0,0)"),
    ("L(a1)a2a3", "(0,1) (1,1)[0,0]", "UUD(0,0)UDD", "2 1 0 0;(0,0)"),
    ("a1L(a2)a3", "(0,1) (2,1)[1,0]", "UUDD(1,0)UD", "1 2 0 0;(1,0)"),
    ("a1a2L(a3)", "(0,1) (2,1)[0,1]", "UUDD(0,1)UD", "1 2 0 0;(0,1)"),
    ("L(L(a1))", "(0,1) (0,1)", "UUUDDD", "3 0 0 0"),
]
