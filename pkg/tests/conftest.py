import json

from wittkit.serialize import witt_to_obj
from wittkit.witt import WittVector


def golden_cli_requests():
    """One request per documented subcommand shape, in both output formats."""
    w = json.dumps(witt_to_obj(WittVector([2, -1, 3])))
    base = [
        ["witt", "--op", "teichmueller", "--a", "7", "--length", "4"],
        ["witt", "--op", "mul", "--u", w, "--v", w],
        ["witt", "--op", "frobenius", "--m", "2", "--u", w],
        ["witt", "--op", "verschiebung", "--m", "3", "--u", w],
        ["am-log", "--family", "hesse-cubic", "--mmax", "6"],
        ["am-log", "--family", "quartic-k3", "--mmax", "5", "--mod", "7"],
        ["am-log", "--family", "quintic-cy3", "--mmax", "4", "--method", "closed-form"],
        ["fgl", "--family", "hesse-cubic", "--deg", "4"],
        ["fgl", "--family", "hesse-cubic", "--deg", "3", "--at-x", "0"],
        ["scan-ordinary", "--family", "hesse-cubic", "--pmax", "7", "--oracle"],
        ["scan-ordinary", "--family", "quintic-cy3", "--pmax", "5"],
        ["pf-check", "--family", "quintic-cy3", "--kmax", "8"],
        ["congruence", "--family", "quintic-cy3", "--p", "3", "--nu", "2"],
        ["congruence", "--family", "hesse-cubic", "--p", "5", "--nu", "2"],
    ]
    for request in base:
        for fmt in ("json", "tsv"):
            yield request + ["--format", fmt]
