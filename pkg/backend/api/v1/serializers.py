from dataclasses import asdict, dataclass

from django.conf import settings
from rest_framework import serializers

from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from core.constants.arithmetic import DELTA_READINGS, MONOMIAL_READING
from core.constants.reports import (
    ALL_SUITES,
    COMMAND_NAMES,
    DEFAULT_TAU_ZETA_ORDER,
    REPORT_FORMATS,
    REPORT_SCHEMA_VERSION,
    SUITE_NAMES,
)
from core.exceptions import UnsupportedCaseError
from core.validators import (
    validate_depth,
    validate_prime,
    validate_rank,
    validate_sign,
    validate_unit,
)
from langlands.parameter import ParamRecord
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc
from shimura.params import SSParams


class ScalarSerializer(serializers.Serializer):
    """
    Сериализатор точного скаляра.
    Формат {n, q, coeffs: [[k, e, num, den], ...]} в базисе ζ_n^k·√q^e;
    create() восстанавливает Scalar без потерь.
    Attributes:
        - n (IntegerField): Порядок кругового поля.
        - q (IntegerField): Простое число под корнем.
        - coeffs (ListField): Строки [k, e, num, den].
    """

    n = serializers.IntegerField(min_value=1)
    q = serializers.IntegerField(validators=[validate_prime])
    coeffs = serializers.ListField(
        child=serializers.ListField(
            child=serializers.IntegerField(), min_length=4, max_length=4
        )
    )

    def validate_coeffs(self, value):
        for _, e, _, den in value:
            if e not in (0, 1) or den == 0:
                raise serializers.ValidationError(f"Некорректная строка коэффициентов: {value}")
        return value

    def to_representation(self, instance):
        return instance.to_json()

    def create(self, validated_data):
        return Scalar.from_json(validated_data)


class RatFuncSerializer(serializers.Serializer):
    """
    Сериализатор рациональной функции от X = q^{−s}.
    Числитель и знаменатель — списки [показатель, скаляр].
    """

    q = serializers.IntegerField(validators=[validate_prime])
    numerator = serializers.ListField(child=serializers.ListField(min_length=2, max_length=2))
    denominator = serializers.ListField(
        child=serializers.ListField(min_length=2, max_length=2)
    )

    def _validate_terms(self, value):
        for exponent, scalar in value:
            if not isinstance(exponent, int):
                raise serializers.ValidationError(f"Показатель {exponent} не целый")
            ScalarSerializer(data=scalar).is_valid(raise_exception=True)
        return value

    def validate_numerator(self, value):
        return self._validate_terms(value)

    def validate_denominator(self, value):
        if not value:
            raise serializers.ValidationError("Знаменатель не может быть пустым")
        return self._validate_terms(value)

    def to_representation(self, instance):
        return instance.to_json()

    def create(self, validated_data):
        return RatFunc.from_json(validated_data)


class TameCharacterSerializer(serializers.Serializer):
    """
    Сериализатор ручного квазихарактера τ.
    Attributes:
        - p (IntegerField): Простое число.
        - value_on_uniformizer (ScalarSerializer): τ(ϖ).
        - residue_exponent (IntegerField): r mod (p − 1).
        - residue_order (IntegerField): p − 1, только для чтения.
        - uniformizer_unit (IntegerField): Единица u в ϖ = p·u.
    """

    p = serializers.IntegerField(validators=[validate_prime])
    value_on_uniformizer = ScalarSerializer()
    residue_exponent = serializers.IntegerField(min_value=0)
    residue_order = serializers.IntegerField(read_only=True)
    uniformizer_unit = serializers.IntegerField(default=1)

    def validate(self, data):
        """
        Проверяет, что характер можно построить.
        Raises: ValidationError, если τ(ϖ) живет над другим q, равен нулю
        или порядок характера поля вычетов не степень двойки.
        """

        validate_unit(data["uniformizer_unit"], data["p"])
        try:
            TameCharacter.from_json(data)
        except (ValueError, ZeroDivisionError, UnsupportedCaseError) as error:
            raise serializers.ValidationError(str(error))
        return data

    def to_representation(self, instance):
        return instance.to_json()

    def create(self, validated_data):
        return TameCharacter.from_json(validated_data)


class ParamRecordSerializer(serializers.Serializer):
    """
    Сериализатор записи параметра Ленглендса.
    Точные значения хранятся в JSON-формах Scalar и PAdic; множитель
    λ_{E/F}(ψ_α)^{−1} переносится только символом.
    """

    params = serializers.DictField()
    psi = serializers.DictField()
    tau_alpha = TameCharacterSerializer()
    pi1_uniformizer = serializers.DictField()
    extension = serializers.DictField()
    xi = serializers.DictField()
    reading = serializers.ChoiceField(choices=DELTA_READINGS)
    readings_agree = serializers.BooleanField()
    induction_applies = serializers.BooleanField()
    lambda_token = serializers.CharField()

    def to_representation(self, instance):
        return instance.to_json()

    def create(self, validated_data):
        return ParamRecord.from_json(validated_data)


@dataclass
class RunConfig:
    """
    Проверенная конфигурация одного запуска команды.
    Attributes:
        command (str): Имя команды.
        p, l, alpha, omega_sign, uniformizer_unit (int): Параметры π.
        tau_zeta_order, tau_zeta_exp, tau_residue_exp (int): τ(ϖ) = ζ^exp и
            показатель на κ^×.
        psi_sign, psi_twist (int): Соглашение для ψ.
        depth (int | None): Глубина прямого суммирования.
        seed (int): Зерно генератора.
        format (str): text или json.
        timing (bool): Писать ли время в отчет.
        suite (str | None): Набор проверок для verify.
        reading (str): Прочтение δ для parameter.
    """

    command: str
    p: int = 3
    l: int = 2
    alpha: int = 1
    omega_sign: int = 1
    uniformizer_unit: int = 1
    tau_zeta_order: int = DEFAULT_TAU_ZETA_ORDER
    tau_zeta_exp: int = 0
    tau_residue_exp: int = 0
    psi_sign: int = 1
    psi_twist: int = 1
    depth: int | None = None
    seed: int | None = None
    format: str = "text"
    timing: bool = False
    suite: str | None = None
    reading: str = MONOMIAL_READING

    def params(self):
        return SSParams(self.p, self.l, self.alpha, self.omega_sign, self.uniformizer_unit)

    def tau(self):
        return TameCharacter.from_exponents(
            self.p,
            self.tau_zeta_order,
            self.tau_zeta_exp,
            self.tau_residue_exp,
            self.uniformizer_unit,
        )

    def psi(self):
        return AdditiveCharacter(self.p, self.psi_sign, self.psi_twist)

    def inputs(self):
        """Входные данные для отчета без флагов вывода."""
        data = asdict(self)
        for key in ("format", "timing"):
            data.pop(key)
        return data


class RunConfigSerializer(serializers.Serializer):
    """
    Сериализатор флагов командной строки.
    Проверяет каждое поле и недопустимые сочетания до начала вычислений.
    Attributes:
        - command (ChoiceField): Имя команды.
        - p (IntegerField): Простое число.
        - остальные поля соответствуют RunConfig.
    """

    command = serializers.ChoiceField(choices=COMMAND_NAMES)
    p = serializers.IntegerField(default=3, validators=[validate_prime])
    l = serializers.IntegerField(default=2, validators=[validate_rank])
    alpha = serializers.IntegerField(default=1)
    omega_sign = serializers.IntegerField(default=1, validators=[validate_sign])
    uniformizer_unit = serializers.IntegerField(default=1)
    tau_zeta_order = serializers.IntegerField(default=DEFAULT_TAU_ZETA_ORDER, min_value=1)
    tau_zeta_exp = serializers.IntegerField(default=0)
    tau_residue_exp = serializers.IntegerField(default=0)
    psi_sign = serializers.IntegerField(default=1, validators=[validate_sign])
    psi_twist = serializers.IntegerField(default=1)
    depth = serializers.IntegerField(
        required=False, allow_null=True, default=None, validators=[validate_depth]
    )
    seed = serializers.IntegerField(required=False, allow_null=True, default=None)
    format = serializers.ChoiceField(choices=REPORT_FORMATS, default="text")
    timing = serializers.BooleanField(default=False)
    suite = serializers.ChoiceField(
        choices=(*SUITE_NAMES, ALL_SUITES), required=False, allow_null=True, default=None
    )
    reading = serializers.ChoiceField(choices=DELTA_READINGS, default=MONOMIAL_READING)

    def validate(self, data):
        """
        Проверяет сочетания полей.
        Args: data (dict): Значения отдельных полей.
        Returns: dict: Те же данные с заполненным seed.
        Raises: ValidationError для p = 2 с α ≠ 1, поиска полюса и параметра
        при p = 2, команды verify без набора и любых параметров, из
        которых нельзя построить π, τ или ψ.
        """

        p = data["p"]
        if p == 2 and data["alpha"] != 1:
            raise serializers.ValidationError("Над ℚ_2 допустимо только α = 1")
        if p == 2 and data["command"] in ("pole_scan", "parameter"):
            raise serializers.ValidationError(
                f"Команда {data['command']} определена только для нечетного p"
            )
        if data["command"] == "verify" and data["suite"] is None:
            raise serializers.ValidationError("Команде verify нужен --suite")
        validate_unit(data["uniformizer_unit"], p)
        validate_unit(data["psi_twist"], p)
        if data["seed"] is None:
            data["seed"] = settings.RANDOM_SEED
        config = RunConfig(**data)
        try:
            config.params()
            config.tau()
        except (ValueError, UnsupportedCaseError) as error:
            raise serializers.ValidationError(str(error))
        return data

    def create(self, validated_data):
        return RunConfig(**validated_data)


class SuiteResultSerializer(serializers.Serializer):
    """Итог набора проверок в отчете (SuiteResult.as_dict())."""

    name = serializers.CharField()
    passed = serializers.BooleanField()
    checked = serializers.IntegerField(min_value=0)
    first_counterexample = serializers.DictField(allow_null=True)
    details = serializers.DictField()


class ReportSerializer(serializers.Serializer):
    """
    Сериализатор JSON-отчета команды.
    Структура совпадает с core.schemas.REPORT_SCHEMA; используется для
    проверки документа перед выводом.
    Attributes:
        - schema (CharField): Версия формата.
        - command (ChoiceField): Имя команды.
        - inputs (DictField): Проверенные флаги запуска.
        - exact (DictField): Точные значения.
        - float (DictField): Приближения тех же величин.
        - tokens (ListField): Невычисляемые множители.
        - timing (DictField): Время счета или null.
        - suite_results (SuiteResultSerializer): Итоги наборов.
        - passed (BooleanField): Общий итог.
    """

    schema = serializers.CharField()
    command = serializers.ChoiceField(choices=COMMAND_NAMES)
    inputs = serializers.DictField()
    exact = serializers.DictField()
    float = serializers.DictField()
    tokens = serializers.ListField(child=serializers.CharField())
    timing = serializers.DictField(required=False, allow_null=True)
    suite_results = SuiteResultSerializer(many=True)
    passed = serializers.BooleanField()

    def validate_schema(self, value):
        if value != REPORT_SCHEMA_VERSION:
            raise serializers.ValidationError(f"Неизвестная версия отчета {value}")
        return value

    def validate(self, data):
        if data["passed"] and not all(row["passed"] for row in data["suite_results"]):
            raise serializers.ValidationError("passed противоречит итогам наборов")
        return data
