import click

from src.cli.common import INTEGER_ARGS, Emitter, build_config, handle_errors, run_options
from src.core.validation import parse_int
from src.enums.command import Command
from src.schemas import FreyCurve
from src.services.frey import conductor, curve_model, to_frey_model
from src.services.ntkernel import factor
from src.services.tate import tate_local


@click.command(context_settings=INTEGER_ARGS)
@click.argument("A")
@click.argument("B")
@run_options
@handle_errors
def frey(a, b, exp_bound, mode, structured, budget, out):
    """Conductor and reduction types of Y^2 = X(X - A)(X + B)."""
    config = build_config(Command.FREY, exp_bound, mode, structured, budget, out)
    A, B = parse_int(a, "A"), parse_int(b, "B")
    model = curve_model(A, B)
    converted = to_frey_model(A, B)
    local = [tate_local(model, p) for p in sorted(factor(model.discriminant))]

    with Emitter(config) as emitter:
        if isinstance(converted, FreyCurve):
            data = conductor(converted)
            if emitter.structured:
                emitter.record("frey_curve", converted)
                emitter.record("conductor", data, message=f"conductor {data.conductor}")
            else:
                emitter.line(f"Frey model {converted}: A={converted.A}, B={converted.B}, C={converted.C}")
                emitter.line(f"conductor {data.conductor}")
        else:
            if emitter.structured:
                emitter.record("twist", converted)
            else:
                emitter.line(f"no Frey model over Q: {converted.reason} (2-exponent {converted.two_exponent})")

        if emitter.structured:
            emitter.record(
                "curve",
                {
                    "ainvs": list(model.ainvs),
                    "discriminant": str(model.discriminant),
                    "j_invariant": str(model.j_invariant),
                    "local": [d.model_dump(mode="json") for d in local],
                },
            )
            return
        emitter.line(f"model {list(model.ainvs)}, discriminant {model.discriminant}, j = {model.j_invariant}")
        for d in local:
            emitter.line(f"  p={d.p}: {d.kodaira}, f={d.conductor_exponent}, v(Dmin)={d.disc_valuation}")
