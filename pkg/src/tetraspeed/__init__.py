"""Constant congruence speed of integer tetration in radix 10."""

from .arith import agreement_depth, decimal_length, digit_sum, last_nonzero_digit, lte_predict, nu
from .decadic import alpha25_prefix, alpha76_prefix, is_automorphic
from .estimator import CongruenceSpeedTransformer, SpeedProfileTransformer, TowerResidueTransformer, check_bases
from .families import (
    ConstructedBase,
    cor21_instance,
    cor25_base,
    lemma20_base,
    remark0_relation,
    remark1_base,
    remark2_residue,
    thm22_base,
    thm23_construct,
    thm24_base,
)
from .speed import SpeedProfile, constant_speed, constant_speed_shortcut, speed_at, speed_profile
from .tower import carmichael, modulus_chain, pow_mod_lifted, tower_exact, tower_mod

__version__ = "0.1.0"
