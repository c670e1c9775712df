"""Words displayed in the two counterexample derivations (tails omitted)."""

REDUCED_FAMILY_WORDS = [
    "Bacb", "abABcb", "abAcbC", "abcAbC", "abcbaBAC", "acbcaBAC", "cabcaBAC",
    "cabacBAC", "cbabcBAC", "cbaCbcAC", "cbCabcAC", "BcbabcAC", "BcabacAC",
    "BacbacAC",
]

STRONG_FAMILY_WORDS = [
    "ACBabcbCBAbC",
    "ACBabcbCaBAC",
    "ACBabcbaCBAC",
    "ACBabcbaCBCA",
    "ACBabcbaBCBA",
    "ACBacbcaBCBA",
    "ACBacbcBAbaCBA",
    "ACBacbcBAbCaBA",
    "ACBacbcBACBcbaBA",
    "ACBcabcBACBcbaBA",
    "AbCBabcBACBcbaBA",
    "AbCabAcBACBcbaBA",
    "AbCabcABACBcbaBA",
    "AbCabcBABCBcbaBA",
    "AbCaCbcABCBcbaBA",
    "AbCabcBABCBcbaBA",
    "ACBcbabcBABCBcbaBA",
    "ACBcabacBABCBcbaBA",
    "CABcabacBABCBcbaBA",
    "CABcabaBCbcABCBcbaBA",
    "CABacbaBCbcABCBcbaBA",
    "CbABcbaBCbcABCBcbaBA",
    "CbAcbCaBCbcABCBcbaBA",
    "CbAcbCBAbaCbcABCBcbaBA",
    "CABabcbCBAbaCbcABCBcbaBA",
    "ACBabcbCBAbaCbcABCBcbaBA",
    "ACBabcbCBAbCabcABCBcbaBA",
    "ACBabcbCBAbCabAcBCBcbaBA",
    "ACBabcbCBAbCBabcBCBcbaBA",
]
