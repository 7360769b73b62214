from dataclasses import dataclass

from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from core.constants.arithmetic import MIN_RANK_L, SIGNS
from metaplectic.cocycle import neighbourhood_profile
from padic.numbers import PAdic
from padic.squares import least_nonresidue


def alpha_representatives(p):
    """Канонические представители α ∈ κ^×/(κ^×)²."""
    return (1,) if p == 2 else (1, least_nonresidue(p))


@dataclass(frozen=True)
class SSParams:
    """
    Параметры простого суперкаспидального π = π_α^ω группы Sp(2l).

    Для p = 2 такое представление единственно, поэтому α = 1, ω = 1 и
    ϖ = 2.

    Attributes:
        p (int): Простое число.
        l (int): Ранг, l ≥ 2.
        alpha (int): Представитель класса α ∈ κ^×/(κ^×)².
        omega_sign (int): ω(−I_{2l}) = ±1.
        uniformizer_unit (int): Единица u в ϖ = p·u.

    Raises:
        ValueError: Если какое-то поле вне допустимых значений.
    """

    p: int
    l: int
    alpha: int = 1
    omega_sign: int = 1
    uniformizer_unit: int = 1

    def __post_init__(self):
        if self.l < MIN_RANK_L:
            raise ValueError(f"l = {self.l} < {MIN_RANK_L}")
        if self.omega_sign not in SIGNS:
            raise ValueError(f"omega_sign must be ±1, got {self.omega_sign}")
        if self.alpha not in alpha_representatives(self.p):
            raise ValueError(
                f"alpha = {self.alpha} is not one of {alpha_representatives(self.p)}"
            )
        if self.uniformizer_unit % self.p == 0:
            raise ValueError(f"{self.uniformizer_unit} is not a unit at {self.p}")
        if self.p == 2 and (self.omega_sign, self.uniformizer_unit) != (1, 1):
            raise ValueError("over Q_2 the representation is unique: use ω = 1, ϖ = 2")

    @property
    def uniformizer(self):
        return PAdic.uniformizer(self.p, self.uniformizer_unit)

    def default_psi(self):
        return AdditiveCharacter(self.p)

    def to_json(self):
        return {
            "p": self.p,
            "l": self.l,
            "alpha": self.alpha,
            "omega_sign": self.omega_sign,
            "uniformizer_unit": self.uniformizer_unit,
        }

    @classmethod
    def from_json(cls, data):
        return cls(**data)

    def __str__(self):
        return (
            f"π[p={self.p}, l={self.l}, α={self.alpha}, "
            f"ω(−I)={self.omega_sign:+d}, ϖ={self.p}·{self.uniformizer_unit}]"
        )


@dataclass(frozen=True)
class SectionData:
    """
    Данные сечения f_s: ручной τ, характер ψ_α и профиль подгруппы 𝒩.

    f_s сосредоточено на B̃₁𝒩 и преобразуется по ε|b|^{s+1/2}γ_ψ(b)τ(b).
    Принадлежность корректна, потому что 1 + 𝔭 (нечетное p) и 1 + 𝔭³
    (p = 2) состоят из квадратов.

    Attributes:
        tau (TameCharacter): Ручной квазихарактер.
        psi (AdditiveCharacter): Уже сдвинутый характер ψ_α.
    """

    tau: TameCharacter
    psi: AdditiveCharacter

    def __post_init__(self):
        if self.tau.p != self.psi.p:
            raise ValueError(f"τ over Q_{self.tau.p} and ψ over Q_{self.psi.p}")

    @classmethod
    def build(cls, params, tau, psi=None):
        """
        Данные для π = π_α^ω: ψ заменяется на ψ_α.

        Raises:
            ValueError: Если τ построен для другого ϖ или другого p.
        """
        if tau.uniformizer_unit != params.uniformizer_unit:
            raise ValueError(
                f"τ uses ϖ = p·{tau.uniformizer_unit}, π uses ϖ = p·{params.uniformizer_unit}"
            )
        psi = params.default_psi() if psi is None else psi
        return cls(tau, psi.twisted(params.alpha))

    @property
    def p(self):
        return self.tau.p

    @property
    def profile(self):
        return neighbourhood_profile(self.p)

    @property
    def depth(self):
        """k, для которого g₂₁/g₂₂ ∈ 𝔭^k на носителе."""
        return self.profile[2]

    def to_json(self):
        return {"tau": self.tau.to_json(), "psi": self.psi.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(TameCharacter.from_json(data["tau"]), AdditiveCharacter.from_json(data["psi"]))
