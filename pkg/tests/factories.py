import factory

from src.schemas import FreyCurve, SolutionWitness, Tern


class TernFactory(factory.Factory):
    class Meta:
        model = Tern

    a = 7
    b = 13
    c = 16

    class Params:
        not_primitive = factory.Trait(a=2, b=4, c=6)
        descent = factory.Trait(a=1, b=3, c=9)


class FreyCurveFactory(factory.Factory):
    class Meta:
        model = FreyCurve

    A = -1
    B = 16


def fabricate_witness(a: int, b: int, x: int, y: int, p: int) -> SolutionWitness:
    """A point of a x^p + b y^p + c z^p = 0 with z = 1 and c := -(a x^p + b y^p)."""
    c = -(a * x**p + b * y**p)
    return SolutionWitness(tern=Tern(a=a, b=b, c=c), p=p, x=x, y=y, z=1)


class SolutionWitnessFactory(factory.Factory):
    """Fabricated witness; override a, b, x, y, p together."""

    class Meta:
        model = fabricate_witness

    a = 1
    b = 1
    x = 1
    y = 1
    p = 11
