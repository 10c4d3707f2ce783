"""Thin command line client for the fdquot service.

Every subcommand serializes its arguments into a request, sends it to the
service (an in-process instance by default, or a remote base URL given by
``--server`` / ``FDQUOT_SERVER``), and renders the JSON response.  Exit
codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

from .qpoly import QRational


def _client(server):
    if server:
        return httpx.Client(base_url=server.rstrip("/"), timeout=60.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _fetch(ctx, path, params=None):
    try:
        with _client(ctx.obj["server"]) as client:
            resp = client.get(path, params=params or {})
    except httpx.HTTPError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except (ValueError, AttributeError):
            detail = resp.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(2)
    return resp.json()


def _emit(ctx, payload, renderer):
    if ctx.obj["fmt"] == "json":
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(renderer(payload))


def _comb(coords, labels, suffix=""):
    """Render an integer or rational vector as a combination of labels."""
    parts = []
    for c, lab in zip(coords, labels):
        if c == 0:
            continue
        c = str(c)
        if c == "1":
            parts.append(f"{lab}{suffix}")
        elif c == "-1":
            parts.append(f"-{lab}{suffix}")
        else:
            parts.append(f"{c} {lab}{suffix}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _table(headers, rows):
    out = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
    for row in rows:
        out.append("| " + " | ".join(str(x) for x in row) + " |")
    return "\n".join(out)


def _poly_str(doc):
    return str(QRational.from_json(doc))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--server",
    envvar="FDQUOT_SERVER",
    default=None,
    metavar="URL",
    help="Base URL of a running service; defaults to an in-process app.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "markdown"]),
    default="markdown",
    show_default=True,
    help="Output format.",
)
@click.version_option()
@click.pass_context
def main(ctx, server, fmt):
    """Exact tables and checks for formal-degree quotient constants."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server
    ctx.obj["fmt"] = fmt


@main.command()
@click.argument("group")
@click.pass_context
def roots(ctx, group):
    """Positive roots and coroots of a builtin group."""
    payload = _fetch(ctx, f"/v1/roots/{group}")

    def render(p):
        labels = p["simpleLabels"]
        head = f"# {p['group']}: {p['count']} positive roots"
        rows = [
            (
                _comb(r["coords"], labels),
                _comb(r["coroot"], labels, suffix="^"),
                r["height"],
                r["lengthClass"],
                r["dim"],
            )
            for r in p["positiveRoots"]
        ]
        return head + "\n\n" + _table(["root", "coroot", "height", "length", "dim"], rows)

    _emit(ctx, payload, render)


@main.command()
@click.argument("group")
@click.option("--remove", required=True, help="Simple root removed from the Levi.")
@click.pass_context
def parabolic(ctx, group, remove):
    """Half sum, fundamental weight and level table of a maximal parabolic."""
    payload = _fetch(ctx, f"/v1/parabolic/{group}", params={"remove": remove})

    def render(p):
        labels = _fetch(ctx, f"/v1/roots/{p['group']}")["simpleLabels"]
        lines = [
            f"# {p['group']}, parabolic removing {p['removedRoot']}",
            "",
            f"- theta: {', '.join(p['theta']) or '(empty)'}",
            f"- dim N: {p['dimN']}",
            f"- rho_P: {_comb(p['rhoP'], labels)}",
            f"- fundamental weight: {_comb(p['alphaTilde'], labels)}",
            f"- relative Weyl group order: {p['relativeWeylOrder']}",
        ]
        if p["adjointCheck"] is not None:
            c = p["adjointCheck"]
            lines.append(
                f"- adjoint dimension check: {c['adjointDim']} = {c['decomposedDim']}"
                f" ({'ok' if c['ok'] else 'FAIL'})"
            )
        rows = [
            (lvl, ", ".join(_comb(v, labels, suffix="^") for v in entry["coroots"]), entry["dim"])
            for lvl, entry in sorted(p["levels"].items(), key=lambda kv: int(kv[0]))
        ]
        lines += ["", _table(["level", "coroots", "dim"], rows)]
        return "\n".join(lines)

    _emit(ctx, payload, render)


@main.command()
@click.argument("group")
@click.pass_context
def motive(ctx, group):
    """Invariant degrees, Iwahori volume exponent and point count."""
    payload = _fetch(ctx, f"/v1/motive/{group}")

    def render(p):
        degrees = ", ".join(
            f"{d} (x{m})" if m > 1 else str(d) for d, m in sorted(
                ((int(k), v) for k, v in p["degrees"].items())
            )
        )
        return "\n".join(
            [
                f"# {p['group']} motive",
                "",
                f"- degrees: {degrees}",
                f"- dim G: {p['dimG']}, dim T: {p['dimT']}",
                f"- Iwahori volume exponent: {p['iwahoriExponent']}",
                f"- point count: {_poly_str(p['pointCount'])}",
            ]
        )

    _emit(ctx, payload, render)


@main.command(name="gamma-gm")
@click.argument("group")
@click.option("--remove", required=True, help="Simple root removed from the Levi.")
@click.pass_context
def gamma_gm_cmd(ctx, group, remove):
    """Parabolic measure constant gamma(G/M) and the full measure factor."""
    payload = _fetch(ctx, f"/v1/gamma-gm/{group}", params={"remove": remove})

    def render(p):
        return "\n".join(
            [
                f"# {p['group']}, gamma(G/M) removing {p['removedRoot']}",
                "",
                f"- dim N: {p['dimN']}",
                f"- dim A_M: {p['dimAM']}, dim A_G: {p['dimAG']}",
                f"- gamma(G/M): {_poly_str(p['gamma'])}",
                f"- measure factor: {_poly_str(p['measureFactor'])}",
            ]
        )

    _emit(ctx, payload, render)


@main.command()
@click.argument("case_name", metavar="CASE")
@click.pass_context
def constants(ctx, case_name):
    """Lattice structure constants of a bundled case."""
    payload = _fetch(ctx, f"/v1/constants/{case_name}")

    def render(p):
        return "\n".join(
            [
                f"# {p['case']}: structure constants",
                "",
                f"- group: {p['group']}, removed root: {p['removedRoot']}, j = {p['j']}",
                f"- chi: {p['chi']}",
                f"- <chi, alpha^vee>: {p['chiPairing']}",
                f"- m_idx: {p['mIdx']}",
                f"- m_idx / <chi, alpha^vee>: {p['heiermannConstant']}",
                f"- j <chi, alpha^vee> / m_idx: {p['compatConstant']}",
                f"- dim A_M: {p['dimAM']}, dim A_G: {p['dimAG']}",
                f"- orbit volume ratio: {p['orbitRatio']}",
            ]
        )

    _emit(ctx, payload, render)


@main.command()
@click.argument("case_name", metavar="CASE")
@click.pass_context
def derive(ctx, case_name):
    """Step-by-step symbolic derivation of the quotient constant."""
    payload = _fetch(ctx, f"/v1/derive/{case_name}")

    def render(p):
        lines = [
            f"# {p['case']}: derivation (m_LS = {p['mLS']}, j = {p['j']})",
            "",
        ]
        for i, s in enumerate(p["steps"], start=1):
            lines.append(f"{i}. [{s['paper_ref']}] {s['rule']}")
            lines.append(f"   before: {s['before']}")
            lines.append(f"   after:  {s['after']}")
        lines.append("")
        lines.append(f"- constant: {p['constant']}")
        lines.append(f"- surviving symbols: {p['surviving'] or 'none'}")
        lines.append(f"- ok: {p['ok']}")
        flags = ", ".join(k for k, v in sorted(p["assumptions"].items()) if v)
        lines.append(f"- assumptions: {flags or 'none'}")
        return "\n".join(lines)

    _emit(ctx, payload, render)
    if not payload["ok"]:
        sys.exit(1)


def _render_verify(p):
    lines = [f"# {p['case']}: verification", ""]
    flags = ", ".join(k for k, v in sorted(p["assumptions"].items()) if v)
    lines.append(f"- assumptions: {flags or 'none'}")
    lines.append("")
    rows = [
        (c["checkName"], c["paper_ref"], c["computed"], c["expected"], "pass" if c["pass"] else "FAIL")
        for c in p["perCheck"]
    ]
    lines.append(_table(["check", "ref", "computed", "expected", "result"], rows))
    lines.append("")
    lines.append(f"overall: {'PASS' if p['overall'] else 'FAIL'}")
    return "\n".join(lines)


@main.command(name="verify-case")
@click.argument("case_name", metavar="[CASE]", required=False)
@click.option("--all", "run_all", is_flag=True, help="Verify every bundled case.")
@click.pass_context
def verify_case_cmd(ctx, case_name, run_all):
    """Verify one bundled case, or all of them."""
    if run_all == bool(case_name):
        raise click.UsageError("give exactly one of CASE or --all")
    if run_all:
        payload = _fetch(ctx, "/v1/verify")

        def render(p):
            rows = [
                (r["case"], sum(1 for c in r["perCheck"] if c["pass"]), len(r["perCheck"]),
                 "PASS" if r["overall"] else "FAIL")
                for r in p["reports"]
            ]
            out = [_table(["case", "checks passed", "checks", "result"], rows), ""]
            out.append(f"overall: {'PASS' if p['overall'] else 'FAIL'}")
            return "\n".join(out)

        _emit(ctx, payload, render)
        sys.exit(0 if payload["overall"] else 1)
    payload = _fetch(ctx, f"/v1/verify/{case_name}")
    _emit(ctx, payload, _render_verify)
    sys.exit(0 if payload["overall"] else 1)


@main.command(name="list-cases")
@click.pass_context
def list_cases(ctx):
    """List the bundled verification cases."""
    payload = _fetch(ctx, "/v1/cases")

    def render(p):
        rows = [
            (
                c["name"],
                c["group"].get("builtin", "custom"),
                c["removedRoot"],
                c["j"],
                f"{c['componentOrders'][0]}/{c['componentOrders'][1]}",
            )
            for c in p["cases"]
        ]
        return _table(["case", "group", "removed", "j", "component orders"], rows)

    _emit(ctx, payload, render)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("fdquot.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
