"""Turn a dataclass of defaults into command-line flags."""
import argparse
from dataclasses import fields


def parse_config(cls, description=None, argv=None):
    p = argparse.ArgumentParser(description=description or cls.__doc__)
    for f in fields(cls):
        flag = "--" + f.name.replace("_", "-")
        if f.type in (bool, "bool"):
            p.add_argument(flag, action="store_true", default=f.default)
        elif f.type in (tuple, "tuple"):
            p.add_argument(flag, type=float, nargs="+", default=list(f.default))
        else:
            kind = {"int": int, "float": float, "str": str}.get(f.type, f.type)
            p.add_argument(flag, type=kind, default=f.default)
    return cls(**vars(p.parse_args(argv)))
