"""Decodes every committed case with the generated py SDK and re-encodes it."""
import importlib
import pathlib
import sys

sys.dont_write_bytecode = True


def main(sdk_parent, cases_dir):
    sys.path.insert(0, sdk_parent)
    know = importlib.import_module("py")
    failures = 0
    cases = sorted(pathlib.Path(cases_dir).glob("*.json"))
    for case in cases:
        text = case.read_text(encoding="utf-8")
        name = case.stem
        try:
            entity = know.from_json(text)
        except know.Error:
            ok = name.startswith("reject_")
        else:
            ok = not name.startswith("reject_") and entity.to_json() == text
            triples = case.with_suffix(".nt")
            if ok and triples.exists():
                ok = entity.to_triples() == triples.read_text(encoding="utf-8")
        print(("PASS " if ok else "FAIL ") + name)
        failures += not ok
    if not cases:
        print("no cases found")
        return 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
