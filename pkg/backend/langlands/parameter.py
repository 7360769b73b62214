"""
Параметр Ленглендса φ_π = Ind_{W_E}^{W_F} ξ_α^ω ⊕ τ_α для нечетного p.

Индуцированное представление не моделируется: на выходе индуцирующие
данные (E, ξ) и характер τ_α. Постоянная Ленглендса λ_{E/F}(ψ_α) не
вычисляется и переносится символом LAMBDA_TOKEN.
"""

import logging
from dataclasses import dataclass

from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from characters.weil import weil_factor, weil_index
from core.constants.arithmetic import (
    COEFFICIENT_READING,
    DELTA_READINGS,
    LAMBDA_TOKEN,
    MONOMIAL_READING,
)
from core.exceptions import UnsupportedCaseError, VerificationError
from langlands.extension import RamifiedExt, coefficient_floor
from padic.numbers import PAdic
from padic.squares import legendre
from scalars.cyclotomic import Scalar
from shimura.gamma import gamma_assemble, pole_value
from shimura.params import SSParams
from tate.factors import tate_gamma

logger = logging.getLogger(__name__)


def _require_odd(p):
    if p == 2:
        raise UnsupportedCaseError("Параметр строится только для нечетного p")


@dataclass(frozen=True)
class TokenScalar:
    """
    Произведение вычислимого Scalar на несколько символов.

    Attributes:
        value (Scalar): Вычислимая часть.
        tokens (tuple[str, ...]): Невычисляемые множители.
    """

    value: Scalar
    tokens: tuple = ()

    def to_json(self):
        return {"value": self.value.to_json(), "tokens": list(self.tokens)}

    @classmethod
    def from_json(cls, data):
        return cls(Scalar.from_json(data["value"]), tuple(data["tokens"]))

    def __str__(self):
        return "·".join([f"({self.value})", *self.tokens])


def tau_alpha(params, psi=None):
    """
    Ручной характер τ_α: слагаемое параметра и единственный полюс γ в s = 1.

    τ_α|𝔬^× ≡ γ_{ψ_α}|𝔬^×, τ_α(ϖ) = γ_{ψ_α}(ϖ)^{−1}·|G(ψ_α^{−1})|/G(ψ_α^{−1}).
    То, что γ_{ψ_α} на единицах — символ Лежандра, проверяется, а не
    предполагается.

    Args:
        params (SSParams): Параметры π, p нечетное.
        psi (AdditiveCharacter | None): Характер уровня 1 (до сдвига на α).

    Returns:
        TameCharacter: Квадратичный характер с показателем (p − 1)/2.

    Raises:
        UnsupportedCaseError: Для p = 2.
        VerificationError: Если γ_{ψ_α}|𝔬^× не символ Лежандра.
    """
    p = params.p
    _require_odd(p)
    twisted = (params.default_psi() if psi is None else psi).twisted(params.alpha)
    for u in range(1, p):
        value = weil_factor(twisted, PAdic.from_int(p, u))
        if value != legendre(u, p):
            raise VerificationError(
                "γ_ψ на единицах не совпадает с символом Лежандра",
                {"p": p, "u": u, "gamma_psi": str(value)},
            )
    return TameCharacter(
        p, pole_value(params, psi), (p - 1) // 2, params.uniformizer_unit
    )


def pi1_uniformizer(l, alpha, uniformizer):
    """
    Униформизатор ϖ_{α,l} = ϖ/((−1)^{l+1}·4α) для GL_{2l}-компоненты.

    Raises:
        UnsupportedCaseError: Для p = 2, где 4α не единица.
    """
    _require_odd(uniformizer.p)
    return uniformizer / ((-1) ** (l + 1) * 4 * alpha)


def character_form(x):
    """Σ_i ι(x)_{i,i+1} + ϖ'^{−1}·ι(x)_{n,1}: аргумент ψ в χ̃²(ι(x))."""
    ext = x.ext
    matrix = x.regular_matrix()
    n = ext.degree
    total = matrix[n - 1][0] / ext.modulus
    for i in range(n - 1):
        total = total + matrix[i][i + 1]
    return total


def xi_principal_units(ext, x, psi):
    """
    ξ(x) = χ̃²(ι(x)) для x ∈ 1 + 𝔭_E.

    Args:
        ext (RamifiedExt): E = F(ζ), ζ^{2l} = ϖ_{α,l}.
        x (ExtElement): Главная единица E.
        psi (AdditiveCharacter): Характер ψ, задающий χ̃².

    Returns:
        Scalar: Значение ξ(x).

    Raises:
        ValueError: Если x ∉ 1 + 𝔭_E.
        PrecisionError: Если цифр не хватило при сведении по ζ^{2l} − ϖ'.
    """
    if x.ext != ext:
        raise ValueError(f"{x} does not lie in {ext}")
    if not x.is_principal_unit:
        raise ValueError(f"{x} is not a principal unit of {ext}")
    return psi(character_form(x))


def principal_level(ext):
    """
    Наименьшее m, для которого ξ тривиален на 1 + 𝔭_E^m.

    Форма x ↦ Σ ι(x)_{i,i+1} + ϖ'^{−1}ι(x)_{n,1} линейна, поэтому достаточно
    оценить ее на базисе ζ^k и валюации коэффициентов элементов 𝔭_E^m.
    """
    forms = [character_form(ext.power_of_zeta(k)) for k in range(ext.degree)]
    for m in range(1, ext.degree + 2):
        if all(
            form.is_zero or form.valuation + coefficient_floor(ext, m, k) >= 1
            for k, form in enumerate(forms)
        ):
            return m
    raise VerificationError(f"ξ не тривиален на 1 + 𝔭_E^{ext.degree + 1}", {"ext": str(ext)})


def parameter_extension(params):
    """E = F(ζ), ζ^{2l} = ϖ_{α,l}."""
    uniformizer = pi1_uniformizer(params.l, params.alpha, params.uniformizer)
    return RamifiedExt(2 * params.l, uniformizer)


def delta_readings(params, tau, psi=None):
    """
    Два прочтения δ в формуле ξ(ζ) = δ·λ_{E/F}(ψ_α)^{−1}.

    - monomial: коэффициент при q^{1/2−s} в γ(s, π, ψ_α)/γ(s, τ_α, ψ_α);
    - coefficient: ω(−I_{2l})γ(ψ_α)^{−1}γ_{ψ_α}^{−1}(ϖ), деленное на
      s-независимый коэффициент γ(s, τ_α, ψ_α).

    Returns:
        dict[str, Scalar]: Значения δ по прочтениям.

    Raises:
        VerificationError: Если частное не пропорционально q^{1/2−s}.
    """
    p = params.p
    twisted = (params.default_psi() if psi is None else psi).twisted(params.alpha)
    total = gamma_assemble(params, TameCharacter.trivial(p, params.uniformizer_unit), psi)
    tau_gamma = tate_gamma(tau, twisted)
    quotient = (total / tau_gamma).as_monomial()
    if quotient is None or quotient[1] != 1:
        raise VerificationError(
            "γ(s, Π₁, ψ_α) не пропорционален q^{1/2−s}",
            {"params": str(params), "quotient": str(total / tau_gamma)},
        )
    tau_monomial = tau_gamma.as_monomial()
    if tau_monomial is None:
        raise UnsupportedCaseError(f"γ(s, {tau}, ψ_α) не одночлен")
    closed_gamma = (
        weil_index(twisted).inverse()
        * weil_factor(twisted, params.uniformizer).inverse()
        * params.omega_sign
    )
    return {
        MONOMIAL_READING: quotient[0] / Scalar.sqrt_q(p),
        COEFFICIENT_READING: closed_gamma / tau_monomial[0],
    }


def xi_residue_and_zeta(params, tau, psi=None, reading=MONOMIAL_READING):
    """
    ξ на κ_F^× и на ζ.

    ξ|κ_F^× = τ_α|κ_F^× ⊗ det(Ind 1_E)^{−1}, где det(Ind 1_E) реализован
    характером дискриминанта ζ^{2l} − ϖ_{α,l}. ξ(ζ) = δ·λ_{E/F}(ψ_α)^{−1}.

    Args:
        params (SSParams): Параметры π, p нечетное.
        tau (TameCharacter): τ_α.
        psi (AdditiveCharacter | None): Характер уровня 1 (до сдвига на α).
        reading (str): Прочтение δ, см. delta_readings.

    Returns:
        tuple[int, TokenScalar]: Показатель ξ на κ^× по модулю p − 1 и ξ(ζ).

    Raises:
        UnsupportedCaseError: Для p = 2.
        VerificationError: Если δ не одночлен или не по модулю 1.
    """
    _require_odd(params.p)
    if reading not in DELTA_READINGS:
        raise ValueError(f"reading must be one of {DELTA_READINGS}, got {reading}")
    det = parameter_extension(params).discriminant_character(params.uniformizer_unit)
    residue_exponent = (tau.residue_exponent - det.residue_exponent) % (params.p - 1)
    delta = delta_readings(params, tau, psi)[reading]
    if not delta.is_unimodular():
        raise VerificationError(
            "Вычислимая часть ξ(ζ) не по модулю 1",
            {"params": str(params), "delta": str(delta)},
        )
    return residue_exponent, TokenScalar(delta, (LAMBDA_TOKEN,))


@dataclass(frozen=True)
class ParamRecord:
    """
    Данные параметра π_α^ω.

    Attributes:
        params (SSParams): Параметры π.
        psi (AdditiveCharacter): Характер ψ (до сдвига на α).
        tau_alpha (TameCharacter): Одномерное слагаемое.
        extension (RamifiedExt): E = F(ζ), ζ^{2l} = ϖ_{α,l}.
        xi_residue_exponent (int): ξ|κ^× как показатель по модулю p − 1.
        xi_on_zeta (TokenScalar): ξ(ζ) = δ·λ_{E/F}(ψ_α)^{−1}.
        reading (str): Прочтение δ.
        readings_agree (bool): Совпадают ли оба прочтения δ.
        induction_applies (bool): p ∤ l, то есть E/F ручное и ξ(x) = χ̃²(ι(x)).
    """

    params: SSParams
    psi: AdditiveCharacter
    tau_alpha: TameCharacter
    extension: RamifiedExt
    xi_residue_exponent: int
    xi_on_zeta: TokenScalar
    reading: str = MONOMIAL_READING
    readings_agree: bool = True
    induction_applies: bool = True
    lambda_token: str = LAMBDA_TOKEN

    @property
    def pi1_uniformizer(self):
        return self.extension.modulus

    def xi_principal_units(self, x):
        return xi_principal_units(self.extension, x, self.psi)

    @property
    def principal_level(self):
        return principal_level(self.extension)

    def to_json(self):
        return {
            "params": self.params.to_json(),
            "psi": self.psi.to_json(),
            "tau_alpha": self.tau_alpha.to_json(),
            "pi1_uniformizer": self.pi1_uniformizer.to_json(),
            "extension": {
                "degree": self.extension.degree,
                "minimal_polynomial": str(self.extension.minimal_polynomial()),
                "discriminant": self.extension.discriminant().to_json(),
            },
            "xi": {
                "residue_exponent": self.xi_residue_exponent,
                "residue_order": self.params.p - 1,
                "on_zeta": self.xi_on_zeta.to_json(),
                "principal_units_level": self.principal_level,
            },
            "reading": self.reading,
            "readings_agree": self.readings_agree,
            "induction_applies": self.induction_applies,
            "lambda_token": self.lambda_token,
        }

    @classmethod
    def from_json(cls, data):
        extension = RamifiedExt(
            data["extension"]["degree"], PAdic.from_json(data["pi1_uniformizer"])
        )
        return cls(
            params=SSParams.from_json(data["params"]),
            psi=AdditiveCharacter.from_json(data["psi"]),
            tau_alpha=TameCharacter.from_json(data["tau_alpha"]),
            extension=extension,
            xi_residue_exponent=data["xi"]["residue_exponent"],
            xi_on_zeta=TokenScalar.from_json(data["xi"]["on_zeta"]),
            reading=data["reading"],
            readings_agree=data["readings_agree"],
            induction_applies=data["induction_applies"],
            lambda_token=data["lambda_token"],
        )


def build_parameter(params, psi=None, reading=MONOMIAL_READING):
    """
    Собирает ParamRecord для π = π_α^ω.

    При p | l запись все равно строится, но induction_applies = False:
    расширение E/F тогда дико разветвлено.

    Args:
        params (SSParams): Параметры π, p нечетное.
        psi (AdditiveCharacter | None): Характер уровня 1.
        reading (str): Прочтение δ.

    Returns:
        ParamRecord: Данные параметра.

    Raises:
        UnsupportedCaseError: Для p = 2.
    """
    _require_odd(params.p)
    psi = params.default_psi() if psi is None else psi
    tau = tau_alpha(params, psi)
    extension = parameter_extension(params)
    residue_exponent, on_zeta = xi_residue_and_zeta(params, tau, psi, reading)
    readings = delta_readings(params, tau, psi)
    record = ParamRecord(
        params=params,
        psi=psi,
        tau_alpha=tau,
        extension=extension,
        xi_residue_exponent=residue_exponent,
        xi_on_zeta=on_zeta,
        reading=reading,
        readings_agree=len(set(readings.values())) == 1,
        induction_applies=params.l % params.p != 0,
    )
    logger.info(f"Параметр {params}: τ_α = {tau}, ξ(ζ) = {on_zeta}")
    return record
