"""Written-out coefficient formulas, evaluated directly on state entries.

Each function takes the coefficient array `p` (shape (4, 4) for two particles,
(2, 2, 2) for the qubit formulas) and works without the contraction engine.
They serve as independent oracles for the pattern and trace forms.
"""
from __future__ import annotations

import numpy as np


def abs2(z):
    return (z * np.conj(z)).real


def I1(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        p[0,0]*p[1,1]
        -p[0,1]*p[1,0]
        +p[0,2]*p[1,3]
        - p[0,3]*p[1,2]
        +p[2,0]*p[3,1]
        -p[2,1]*p[3,0]
        +p[2,2]*p[3,3]
        - p[2,3]*p[3,2]
    )


def I2(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        p[1,3]*p[2,0]
        -p[1,0]*p[2,3]
        +p[1,1]*p[2,2]
        -p[1,2]*p[2,1]
        +p[0,2]*p[3,1]
        -p[0,1]*p[3,2]
        +p[0,0]*p[3,3]
        -p[0,3]*p[3,0]
    )


def I2A(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        p[0,0]*p[1,3]
        -p[0,3]*p[1,0]
        +p[0,2]*p[1,1]
        -p[0,1]*p[1,2]
        +p[2,2]*p[3,1]
        - p[2,1]*p[3,2]
        +p[2,0]*p[3,3]
        -p[2,3]*p[3,0]
    )


def I2B(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        p[1,1]*p[2,0]
        -p[1,0]*p[2,1]
        +p[1,3]*p[2,2]
        -p[1,2]*p[2,3]
        +p[0,0]*p[3,1]
        -p[0,1]*p[3,0]
        +p[0,2]*p[3,3]
        -p[0,3]*p[3,2]
    )


def R1(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        abs2(p[0,3]*p[1,2]- p[0,2]*p[1,3]+ p[2,3]*p[3,2]- p[2,2]*p[3,3])
        -abs2(p[1,2]*p[0,0]- p[0,2]*p[1,0]+ p[2,0]*p[3,2]- p[2,2]*p[3,0])
        -abs2(p[1,3]*p[0,0]- p[0,3]*p[1,0]+ p[2,0]*p[3,3]- p[2,3]*p[3,0])
        + abs2(p[1,0]*p[0,1]- p[1,1]*p[0,0]+ p[2,1]*p[3,0]- p[2,0]*p[3,1])
        -abs2(p[1,2]*p[0,1]- p[0,2]*p[1,1]+ p[2,1]*p[3,2]- p[3,1]*p[2,2])
        - abs2(p[1,3]*p[0,1]- p[1,1]*p[0,3] + p[2,1]*p[3,3]- p[2,3]*p[3,1])
    )


def R3(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        abs2(p[2,0]*p[1,1]- p[1,0]*p[2,1]+ p[0,0]*p[3,1]- p[0,1]*p[3,0])
        -abs2(p[3,0]*p[0,3]- p[3,3]*p[0,0]+ p[1,0]*p[2,3]- p[1,3]*p[2,0])
        -abs2( p[2,3]*p[1,1]- p[3,3]*p[0,1]+ p[3,1]*p[0,3]- p[2,1]*p[1,3])
        -abs2( p[3,0]*p[0,2]- p[3,2]*p[0,0]+ p[2,2]*p[1,0]- p[1,2]*p[2,0])
        -abs2( p[3,1]*p[0,2]- p[3,2]*p[0,1]- p[2,1]*p[1,2] + p[2,2]*p[1,1] )
        +abs2( p[3,3]*p[0,2]- p[3,2]*p[0,3]+ p[2,2]*p[1,3]- p[2,3]*p[1,2])
    )


def R4(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        abs2(p[3,0]*p[2,1]- p[2,0]*p[3,1]+ p[3,2]*p[2,3]- p[2,2]*p[3,3])
        -abs2(p[2,1]*p[0,0]- p[2,0]*p[0,1]+ p[0,2]*p[2,3]- p[2,2]*p[0,3])
        -abs2(p[3,1]*p[0,0]- p[3,0]*p[0,1]+ p[0,2]*p[3,3]- p[3,2]*p[0,3])
        + abs2(p[1,0]*p[0,1]- p[1,1]*p[0,0]+ p[1,2]*p[0,3]- p[0,2]*p[1,3])
        -abs2(p[2,1]*p[1,0]- p[2,0]*p[1,1]+ p[1,2]*p[2,3]- p[1,3]*p[2,2])
        - abs2(p[3,1]*p[1,0]- p[1,1]*p[3,0] + p[1,2]*p[3,3]- p[3,2]*p[1,3])
    )


def R6(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        abs2(p[0,2]*p[1,1]- p[0,1]*p[1,2]+ p[0,0]*p[1,3]- p[1,0]*p[0,3])
        -abs2(p[3,0]*p[0,3]- p[3,3]*p[0,0]+ p[0,1]*p[3,2]- p[3,1]*p[0,2])
        -abs2( p[3,2]*p[1,1]- p[3,3]*p[1,0]+ p[1,3]*p[3,0]- p[1,2]*p[3,1])
        -abs2( p[0,3]*p[2,0]- p[2,3]*p[0,0]+ p[2,2]*p[0,1]- p[2,1]*p[0,2])
        -abs2( p[1,3]*p[2,0]- p[2,3]*p[1,0]- p[1,2]*p[2,1] + p[2,2]*p[1,1] )
        +abs2( p[3,3]*p[2,0]- p[2,3]*p[3,0]+ p[2,2]*p[3,1]- p[3,2]*p[2,1])
    )


def R2(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (p[1,2]*p[2,3]- p[0,2]*p[3,3]+ p[0,3]*p[3,2]- p[1,3]*p[2,2]) * (c[0,3]*c[1,2]- c[0,2]*c[1,3]+ c[2,3]*c[3,2]- c[2,2]*c[3,3])
        + (p[2,2]*p[1,0]- p[1,2]*p[2,0]+ p[0,2]*p[3,0]- p[0,0]*p[3,2]) * ( c[0,0]*c[1,2]-c[0,2]*c[1,0]- c[2,2]*c[3,0]+ c[2,0]*c[3,2])
        + (p[2,3]*p[1,0]- p[1,3]*p[2,0]+ p[0,3]*p[3,0]- p[3,3]*p[0,0]) * ( c[0,0]*c[1,3]-c[0,3]*c[1,0]- c[2,3]*c[3,0]+ c[2,0]*c[3,3])
        + (p[1,1]*p[2,0]- p[1,0]*p[2,1]+ p[0,0]*p[3,1]- p[0,1]*p[3,0]) *( c[0,0]*c[1,1]-c[0,1]*c[1,0]- c[2,1]*c[3,0]+ c[2,0]*c[3,1])
        + (p[1,1]*p[2,2]- p[0,1]*p[3,2]+ p[3,1]*p[0,2]- p[2,1]*p[1,2]) * (c[0,1]*c[1,2]-c[0,2]*c[1,1]- c[2,2]*c[3,1]+ c[2,1]*c[3,2])
        + (p[1,1]*p[2,3]- p[0,1]*p[3,3]+ p[3,1]*p[0,3]- p[2,1]*p[1,3]) * (c[0,1]*c[1,3]-c[0,3]*c[1,1]- c[2,3]*c[3,1]+ c[2,1]*c[3,3])
    )


def R5(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (p[2,1]*p[3,2]- p[2,0]*p[3,3]+ p[3,0]*p[2,3]- p[3,1]*p[2,2]) * (c[3,0]*c[2,1]- c[2,0]*c[3,1]+ c[3,2]*c[2,3]- c[2,2]*c[3,3])
        + (p[2,2]*p[0,1]- p[2,1]*p[0,2]+ p[2,0]*p[0,3]- p[0,0]*p[2,3]) * ( c[0,0]*c[2,1]-c[2,0]*c[0,1]- c[2,2]*c[0,3]+ c[0,2]*c[2,3])
        + (p[3,2]*p[0,1]- p[3,1]*p[0,2]+ p[0,3]*p[3,0]- p[3,3]*p[0,0]) * ( c[0,0]*c[3,1]-c[3,0]*c[0,1]- c[3,2]*c[0,3]+ c[0,2]*c[3,3])
        + (p[1,1]*p[0,2]- p[0,1]*p[1,2]+ p[0,0]*p[1,3]- p[1,0]*p[0,3]) *( c[0,0]*c[1,1]-c[0,1]*c[1,0]- c[1,2]*c[0,3]+ c[0,2]*c[1,3])
        + (p[1,1]*p[2,2]- p[1,0]*p[2,3]+ p[1,3]*p[2,0]- p[1,2]*p[2,1]) * (c[1,0]*c[2,1]-c[2,0]*c[1,1]- c[2,2]*c[1,3]+ c[1,2]*c[2,3])
        + (p[1,1]*p[3,2]- p[1,0]*p[3,3]+ p[1,3]*p[3,0]- p[1,2]*p[3,1]) * (c[1,0]*c[3,1]-c[3,0]*c[1,1]- c[3,2]*c[1,3]+ c[1,2]*c[3,3])
    )


def T1(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (abs2(p[0,0])+ abs2(p[1,0])- abs2(p[2,0])- abs2(p[3,0]))**2
        +(abs2(p[0,1])+ abs2(p[1,1])- abs2(p[2,1])- abs2(p[3,1]))**2
        +(abs2(p[0,2])+ abs2(p[1,2])- abs2(p[2,2])- abs2(p[3,2]))**2
        +(abs2(p[0,3])+ abs2(p[1,3])- abs2(p[2,3])- abs2(p[3,3]))**2
        +2*abs2(p[0,1]*c[0,0]+p[1,1]*c[1,0]- p[2,1]*c[2,0]- p[3,1]*c[3,0])
        -2*abs2(p[0,2]*c[0,0]+p[1,2]*c[1,0]- p[2,2]*c[2,0]- p[3,2]*c[3,0])
        -2*abs2(p[0,2]*c[0,1]+p[1,2]*c[1,1]- p[2,2]*c[2,1]- p[3,2]*c[3,1])
        -2*abs2(p[0,3]*c[0,0]+p[1,3]*c[1,0]- p[2,3]*c[2,0]- p[3,3]*c[3,0])
        -2*abs2(p[0,3]*c[0,1]+p[1,3]*c[1,1]- p[2,3]*c[2,1]- p[3,3]*c[3,1])
        +2*abs2(p[0,3]*c[0,2]+p[1,3]*c[1,2]- p[2,3]*c[2,2]- p[3,3]*c[3,2])
        -(abs2(p[0,0])+ abs2(p[1,0])- abs2(p[2,0])- abs2(p[3,0]) +abs2(p[0,1])+ abs2(p[1,1])- abs2(p[2,1])- abs2(p[3,1]) -abs2(p[0,2])- abs2(p[1,2])+ abs2(p[2,2])+ abs2(p[3,2]) -abs2(p[0,3])- abs2(p[1,3])+ abs2(p[2,3])+ abs2(p[3,3]))**2
    )


def Q1(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (p[0,3]*c[0,0]+p[0,1]*c[0,2]+p[1,1]*c[1,2]+p[1,3]*c[1,0])*(p[2,2]*p[3,0]-p[2,0]*p[3,2])
        + (p[0,2]*c[0,0]+p[1,2]*c[1,0]- p[0,1]*c[0,3]-p[1,1]*c[1,3])*(p[2,0]*p[3,3]- p[2,3]*p[3,0])
        + (p[0,0]*c[0,0]+p[1,0]*c[1,0]+p[0,1]*c[0,1]+p[1,1]*c[1,1])*(p[2,3]*p[3,2]- p[2,2]*p[3,3])
        + (p[0,3]*c[0,1]-p[0,0]*c[0,2]+p[1,3]*c[1,1]-p[1,0]*c[1,2])*(p[2,2]*p[3,1]- p[2,1]*p[3,2])
        +(p[0,2]*c[0,1]+p[1,2]*c[1,1]+p[0,0]*c[0,3]+p[1,0]*c[1,3])*(p[2,1]*p[3,3]-p[2,3]*p[3,1] )
        +(p[0,2]*c[0,2]+p[0,3]*c[0,3]+ p[1,2]*c[1,2]+p[1,3]*c[1,3])*( p[2,0]*p[3,1]-p[2,1]*p[3,0])
        + (p[2,0]*c[2,0]+p[2,1]*c[2,1]+p[3,0]*c[3,0]+p[3,1]*c[3,1])*(p[0,2]*p[1,3]-p[0,3]*p[1,2])
        + (p[2,2]*c[2,0]-p[2,1]*c[2,3]+p[3,2]*c[3,0]-p[3,1]*c[3,3])*(p[0,3]*p[1,0]- p[0,0]*p[1,3])
        +(p[2,3]*c[2,0]+p[3,3]*c[3,0]+p[3,1]*c[3,2]+p[2,1]*c[2,2])*( p[0,0]*p[1,2]- p[0,2]*p[1,0])
        + (p[2,2]*c[2,1]+p[3,2]*c[3,1]+p[2,0]*c[2,3]+p[3,0]*c[3,3] )*( p[0,3]*p[1,1]- p[0,1]*p[1,3])
        + (p[2,0]*c[2,2]-p[3,3]*c[3,1]-p[2,3]*c[2,1]+p[3,0]*c[3,2])*(p[0,2]*p[1,1]- p[0,1]*p[1,2])
        + (p[2,2]*c[2,2]+p[2,3]*c[2,3]+p[3,2]*c[3,2]+p[3,3]*c[3,3])*(p[0,1]*p[1,0]- p[0,0]*p[1,1])
    )


def Q2(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (p[0,0]*c[0,0]- p[0,3]*c[0,3]+ p[3,3]*c[3,3]- p[3,0]*c[3,0])*(p[1,2]*p[2,1]- p[1,1]*p[2,2])
        + (p[0,3]*c[0,1]- p[3,2]*c[3,0]- p[3,3]*c[3,1]+ p[0,2]*c[0,0])*(p[1,1]*p[2,0]- p[1,0]*p[2,1])
        + (p[0,0]*c[0,1]- p[3,2]*c[3,3]- p[3,0]*c[3,1]+ c[0,3]*p[0,2])*(p[1,3]*p[2,1]- p[1,1]*p[2,3])
        + (p[0,3]*c[0,2]- p[3,3]*c[3,2]- p[3,1]*c[3,0]+ c[0,0]*p[0,1])*( p[1,0]*p[2,2]- p[1,2]*p[2,0] )
        + ( p[3,2]*c[3,2]- p[0,2]*c[0,2]+ c[0,1]*p[0,1]- p[3,1]*c[3,1])*(p[1,0]*p[2,3]-p[1,3]*p[2,0] )
        + (p[3,1]*c[3,3]- p[0,0]*c[0,2]+ p[3,0]*c[3,2]- p[0,1]*c[0,3])*(p[1,3]*p[2,2]- p[1,2]*p[2,3])
        + (p[1,0]*c[1,2]- p[2,0]*c[2,2]- p[2,1]*c[2,3]+ p[1,1]*c[1,3])*( p[0,3]*p[3,2]- p[0,2]*p[3,3])
        + (p[1,1]*c[1,0]- p[2,3]*c[2,2]+ p[1,3]*c[1,2]- p[2,1]*c[2,0])*(p[3,0]*p[0,2]-p[3,2]*p[0,0] )
        + (p[1,2]*c[1,0]- p[2,2]*c[2,0]- p[2,3]*c[2,1]+ c[1,1]*p[1,3])*(p[3,1]*p[0,0]- p[0,1]*p[3,0])
        + (p[1,2]*c[1,3] - p[2,2]*c[2,3]+ p[1,0]*c[1,1]- p[2,0]*c[2,1])*(p[3,3]*p[0,1]- p[3,1]*p[0,3])
        + (p[1,1]*c[1,1]- p[1,2]*c[1,2]- p[2,1]*c[2,1]+ p[2,2]*c[2,2])*(p[3,0]*p[0,3]- p[0,0]*p[3,3])
        + (p[1,0]*c[1,0]- p[1,3]*c[1,3]- p[2,0]*c[2,0]+ p[2,3]*c[2,3])*(p[0,1]*p[3,2]- p[3,1]*p[0,2] )
    )


def Q3(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (p[2,0]*c[0,0]+ p[2,1]*c[0,1]+ p[3,0]*c[1,0]+ p[3,1]*c[1,1])*( p[0,2]*p[1,3]-p[0,3]*p[1,2])
        + (p[2,3]*c[0,1]- p[2,0]*c[0,2]+ p[3,3]*c[1,1]- p[3,0]*c[1,2])*(p[0,1]*p[1,2]-p[0,2]*p[1,1])
        + (p[2,3]*c[0,0]+ p[2,1]*c[0,2]+ p[3,3]*c[1,0]+ p[3,1]*c[1,2])*(p[0,0]*p[1,2]-p[0,2]*p[1,0])
        + (p[2,2]*c[0,1]+ p[2,0]*c[0,3]+ p[3,2]*c[1,1]+ p[3,0]*c[1,3])*(p[0,3]*p[1,1]- p[0,1]*p[1,3])
        + (p[2,2]*c[0,0]- p[2,1]*c[0,3]+ p[3,2]*c[1,0]- p[3,1]*c[1,3])*(p[0,3]*p[1,0]- p[0,0]*p[1,3])
        + (p[2,2]*c[0,2]+ p[2,3]*c[0,3]+ p[3,2]*c[1,2]+ p[3,3]*c[1,3])*(p[0,1]*p[1,0]- p[0,0]*p[1,1])
        + (p[0,0]*c[2,0]+ p[0,1]*c[2,1]+ p[1,0]*c[3,0]+ p[1,1]*c[3,1])*(p[2,3]*p[3,2]- p[2,2]*p[3,3])
        + ( p[0,0]*c[2,2]-p[0,3]*c[2,1]- p[1,3]*c[3,1]+ p[1,0]*c[3,2])*( p[2,1]*p[3,2]-p[2,2]*p[3,1])
        + (p[0,3]*c[2,0]+ p[0,1]*c[2,2]+ p[1,3]*c[3,0]+ p[1,1]*c[3,2])*(p[2,2]*p[3,0]- p[2,0]*p[3,2])
        + (p[0,2]*c[2,1]+ p[0,0]*c[2,3]+ p[1,2]*c[3,1]+ p[1,0]*c[3,3])*( p[2,1]*p[3,3]-p[2,3]*p[3,1])
        + (p[0,2]*c[2,0]- p[0,1]*c[2,3]+ p[1,2]*c[3,0]- p[1,1]*c[3,3])*( p[2,0]*p[3,3]-p[2,3]*p[3,0])
        + (p[0,2]*c[2,2]+ p[0,3]*c[2,3]+ p[1,2]*c[3,2]+ p[1,3]*c[3,3])*( p[2,0]*p[3,1]-p[2,1]*p[3,0])
    )


def Q4(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (p[0,0]*c[0,0]- p[0,3]*c[0,3]- p[1,3]*c[1,3]+ p[1,0]*c[1,0])*( p[2,1]*p[3,2]- p[2,2]*p[3,1] )
        + (p[0,3]*c[0,1]+ p[1,2]*c[1,0]+ p[1,3]*c[1,1]+ p[0,2]*c[0,0])*( p[2,0]*p[3,1]- p[2,1]*p[3,0] )
        + (p[0,0]*c[0,1]+ p[1,0]*c[1,1]+ p[1,2]*c[1,3]+ p[0,2]*c[0,3])*( p[2,1]*p[3,3]- p[2,3]*p[3,1])
        + (p[0,3]*c[0,2]+ p[1,3]*c[1,2]+ p[1,1]*c[1,0]+ p[0,1]*c[0,0])*( p[2,2]*p[3,0]- p[2,0]*p[3,2])
        + (p[0,0]*c[0,2]+ p[1,0]*c[1,2]+ p[1,1]*c[1,3]+ p[0,1]*c[0,3])*(p[2,3]*p[3,2]- p[2,2]*p[3,3])
        + (p[1,1]*c[1,1]- p[1,2]*c[1,2]- p[0,2]*c[0,2]+ p[0,1]*c[0,1])*(p[2,3]*p[3,0]- p[2,0]*p[3,3])
        + (p[2,1]*c[2,0]+ p[2,3]*c[2,2]+ p[3,1]*c[3,0]+ p[3,3]*c[3,2])*(p[0,0]*p[1,2]- p[0,2]*p[1,0])
        + (p[2,2]*c[2,0]+ p[2,3]*c[2,1]+ p[3,2]*c[3,0]+ p[3,3]*c[3,1])*(p[1,0]*p[0,1]- p[0,0]*p[1,1])
        + (p[2,0]*c[2,1]+ p[2,2]*c[2,3]+ p[3,0]*c[3,1]+ p[3,2]*c[3,3])*(p[0,3]*p[1,1]- p[0,1]*p[1,3])
        + (p[2,1]*c[2,1]- p[2,2]*c[2,2]+ p[3,1]*c[3,1]- p[3,2]*c[3,2])*(p[0,0]*p[1,3]- p[0,3]*p[1,0])
        + (p[2,0]*c[2,2]+ p[2,1]*c[2,3]+ p[3,0]*c[3,2]+ p[3,1]*c[3,3])*(p[0,2]*p[1,3]- p[0,3]*p[1,2])
        + (p[2,0]*c[2,0]- p[2,3]*c[2,3]+ p[3,0]*c[3,0]- p[3,3]*c[3,3])*(p[0,2]*p[1,1]- p[0,1]*p[1,2])
    )


def T2(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (abs2(p[0,2]) + abs2(p[1,2]) - abs2(p[2,2]) -abs2(p[3,2])+ abs2(p[0,0]) + abs2(p[1,0]) - abs2(p[2,0]) - abs2(p[3,0])) * (p[2,0]*c[0,2]-c[2,0]*p[0,2] + p[3,0]*c[1,2] - c[3,0]*p[1,2] - p[0,0]*c[2,2] + c[0,0]*p[2,2]-p[1,0]*c[3,2] +c[1,0]*p[3,2])
        -( abs2(p[0,3]) + abs2(p[1,3]) - abs2(p[2,3]) - abs2(p[3,3]) +abs2(p[0,1]) + abs2(p[1,1]) - abs2(p[2,1]) - abs2(p[3,1]) ) * (c[2,3]*p[0,1]-p[2,3]*c[0,1]+ c[3,3]*p[1,1] - p[3,3]*c[1,1] + p[0,3]*c[2,1] - c[0,3]*p[2,1] +p[1,3]*c[3,1] - c[1,3]*p[3,1] )
        +( p[0,2]*c[2,2]-p[2,2]*c[0,2] - p[3,2]*c[1,2] + p[1,2]*c[3,2] + p[0,0]*c[2,0]-p[2,0]*c[0,0] - p[3,0]*c[1,0] + p[1,0]*c[3,0]) * (p[0,0]*c[0,2]+c[0,0]*p[0,2] + p[1,0]*c[1,2] + c[1,0]*p[1,2]- p[2,0]*c[2,2]- c[2,0]*p[2,2] - p[3,0]*c[3,2]- c[3,0]*p[3,2] )
        +( p[0,1]*c[2,1]-p[2,1]*c[0,1] - p[3,1]*c[1,1] + p[1,1]*c[3,1] + p[2,3]*c[0,3] - p[0,3]*c[2,3]+ p[3,3]*c[1,3] - p[1,3]*c[3,3]) * (p[0,3]*c[0,1]- c[0,3]*p[0,1] + p[1,3]*c[1,1] - c[1,3]*p[1,1] - p[2,3]*c[2,1] + c[2,3]*p[2,1]- p[3,3]*c[3,1] + c[3,3]*p[3,1])
        +( p[0,0]*c[2,1] -p[2,0]*c[0,1] - p[3,0]*c[1,1] + p[1,0]*c[3,1]- p[2,2]*c[0,3] - p[3,2]*c[1,3] + p[0,2]*c[2,3] + p[1,2]*c[3,3]) * (p[0,3]*c[0,0] + p[1,3]*c[1,0] - p[2,3]*c[2,0] - p[3,3]*c[3,0]+c[0,2]*p[0,1] +c[1,2]*p[1,1] - c[2,2]*p[2,1] - c[3,2]*p[3,1])
        +(c[0,1]*p[0,2] + c[1,1]*p[1,2] - c[2,1]*p[2,2] - c[3,1]*p[3,2] + c[0,3]*p[0,0] + c[1,3]*p[1,0] - c[2,3]*p[2,0] - c[3,3]*p[3,0]) * (c[2,2]*p[0,3] + c[3,2]*p[1,3] - c[0,2]*p[2,3] - c[1,2]*p[3,3] -p[2,1]*c[0,0] - p[3,1]*c[1,0] + p[0,1]*c[2,0] + p[1,1]*c[3,0])
        -(c[0,1]*p[0,0] + c[1,1]*p[1,0] - c[2,1]*p[2,0] - c[3,1]*p[3,0])*(c[2,0]*p[0,3] + c[3,0]*p[1,3] - c[0,0]*p[2,3] - c[1,0]*p[3,3] - p[2,1]*c[0,2] - p[3,1]*c[1,2] + p[0,1]*c[2,2] + p[1,1]*c[3,2])
        + (p[0,1]*c[0,0] + p[1,1]*c[1,0] - p[2,1]*c[2,0] - p[3,1]*c[3,0])*(p[2,0]*c[0,3] + p[3,0]*c[1,3] - p[0,0]*c[2,3] - p[1,0]*c[3,3] - c[2,1]*p[0,2] - c[3,1]*p[1,2] + c[0,1]*p[2,2] + c[1,1]*p[3,2])
        -(p[0,3]*c[0,2] + p[1,3]*c[1,2] - p[2,3]*c[2,2] - p[3,3]*c[3,2])*( p[0,2]*c[2,1] -p[2,2]*c[0,1] - p[3,2]*c[1,1] + p[1,2]*c[3,1] +c[2,3]*p[0,0] + c[3,3]*p[1,0] -c[0,3]*p[2,0] - c[1,3]*p[3,0] )
        +(p[0,2]*c[0,3] + p[1,2]*c[1,3] - p[2,2]*c[2,3] - p[3,2]*c[3,3])*(c[0,2]*p[2,1] -c[2,2]*p[0,1] - c[3,2]*p[1,1] +c[1,2]*p[3,1] +p[2,3]*c[0,0]+ p[3,3]*c[1,0] -p[0,3]*c[2,0] - p[1,3]*c[3,0] )
    )


def N1N4mN2N3(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (p[2,0]*c[0,0]+ p[2,1]*c[0,1]- p[2,2]*c[0,2]- p[2,3]*c[0,3]+ p[3,0]*c[1,0]+ p[3,1]*c[1,1]- p[3,2]*c[1,2]- p[3,3]*c[1,3] - p[0,0]*c[2,0]- p[0,1]*c[2,1]+ p[0,2]*c[2,2]+ p[0,3]*c[2,3]- p[1,0]*c[3,0]- p[1,1]*c[3,1]+ p[1,2]*c[3,2]+ p[1,3]*c[3,3]) * (p[0,2]*c[0,0]+ p[0,3]*c[0,1]- p[0,0]*c[0,2]- p[0,1]*c[0,3]+ p[1,2]*c[1,0]+ p[1,3]*c[1,1]- p[1,0]*c[1,2]- p[1,1]*c[1,3] - p[2,2]*c[2,0]- p[2,3]*c[2,1]+ p[2,0]*c[2,2]+ p[2,1]*c[2,3]- p[3,2]*c[3,0]- p[3,3]*c[3,1]+ p[3,0]*c[3,2]+ p[3,1]*c[3,3])
        + ( p[2,0]*c[0,2]-p[2,2]*c[0,0]- p[2,3]*c[0,1]+ p[2,1]*c[0,3]- p[3,2]*c[1,0]- p[3,3]*c[1,1]+ p[3,0]*c[1,2]+ p[3,1]*c[1,3] + p[0,2]*c[2,0]+ p[0,3]*c[2,1]- p[0,0]*c[2,2]- p[0,1]*c[2,3]+ p[1,2]*c[3,0]+ p[1,3]*c[3,1]- p[1,0]*c[3,2]- p[1,1]*c[3,3]) *(abs2(p[0,0])+ abs2(p[0,1])- abs2(p[0,2])- abs2(p[0,3])+ abs2(p[1,0])+ abs2(p[1,1])- abs2(p[1,2])- abs2(p[1,3]) - abs2(p[2,0])- abs2(p[2,1])+ abs2(p[2,2])+ abs2(p[2,3])-abs2(p[3,0])- abs2(p[3,1])+ abs2(p[3,2])+ abs2(p[3,3]))
    )


def s2(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        (p[0,0,0]*p[1,1,1]-p[0,1,1]*p[1,0,0]+ p[0,1,0]*p[1,0,1]- p[0,0,1]*p[1,1,0]) *(abs2(p[0,0,0])+ abs2(p[0,0,1])+ abs2(p[1,0,0])+ abs2(p[1,0,1]))
        + 2*( p[0,0,1]*p[1,0,0]- p[0,0,0]*p[1,0,1]) *( p[0,1,0]*c[0,0,0]+ p[0,1,1]*c[0,0,1]+ p[1,1,0]*c[1,0,0]+ p[1,1,1]*c[1,0,1])
        + 2*( p[0,1,0]*p[1,1,1]-p[0,1,1]*p[1,1,0]) *( p[0,0,0]*c[0,1,0]+ p[0,0,1]*c[0,1,1]+ p[1,0,0]*c[1,1,0]+ p[1,0,1]*c[1,1,1])
        + (p[0,1,1]*p[1,0,0]- p[0,1,0]*p[1,0,1]+ p[0,0,1]*p[1,1,0]- p[0,0,0]*p[1,1,1]) *( abs2(p[0,1,0])+ abs2(p[0,1,1])+ abs2(p[1,1,0])+ abs2(p[1,1,1]))
    )


def J3mJ1sq(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        2*(p[0,1,0]*c[0,0,0]+ p[0,1,1]*c[0,0,1]+ p[1,1,0]*c[1,0,0]+ p[1,1,1]*c[1,0,1]) * (p[0,0,0]*c[0,1,0]+ p[0,0,1]*c[0,1,1]+ p[1,0,0]*c[1,1,0]+ p[1,0,1]*c[1,1,1])
        -2*(abs2(p[0,1,0])+ abs2(p[0,1,1])+ abs2(p[1,1,0])+ abs2(p[1,1,1])) * (abs2(p[0,0,0])+ abs2(p[0,0,1])+ abs2(p[1,0,0])+ abs2(p[1,0,1]))
    )


def J2mJ1sq(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        2*( p[1,0,0]*c[0,0,0]+ p[1,0,1]*c[0,0,1]+ p[1,1,0]*c[0,1,0]+ p[1,1,1]*c[0,1,1]) * ( p[0,0,0]*c[1,0,0]+ p[0,0,1]*c[1,0,1]+ p[0,1,0]*c[1,1,0]+ p[0,1,1]*c[1,1,1])
        -2*( abs2(p[0,0,0])+ abs2(p[0,0,1])+ abs2(p[0,1,0])+ abs2(p[0,1,1])) * ( abs2(p[1,0,0])+ abs2(p[1,0,1])+ abs2(p[1,1,0])+ abs2(p[1,1,1]))
    )


def J4mJ1sq(p):
    p = np.asarray(p, dtype=complex)
    c = p.conj()
    return (
        2*(p[0,0,1]*c[0,0,0] + p[0,1,1]*c[0,1,0] + p[1,0,1]*c[1,0,0] + p[1,1,1]*c[1,1,0]) * ( p[0,0,0]*c[0,0,1] + p[0,1,0]*c[0,1,1] + p[1,0,0]*c[1,0,1] + p[1,1,0]*c[1,1,1])
        - 2*(abs2(p[0,0,0] ) + abs2(p[0,1,0] ) + abs2(p[1,0,0]) + abs2(p[1,1,0] )) *( abs2(p[0,0,1] ) + abs2(p[0,1,1] ) + abs2(p[1,0,1] ) + abs2(p[1,1,1]))
    )
