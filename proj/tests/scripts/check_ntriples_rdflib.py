"""Compares the committed N-Triples golden with rdflib's reading of the Turtle."""
import sys


def main(ttl, nt):
    try:
        import rdflib
        import rdflib.compare
    except ImportError:
        print("rdflib not installed")
        return 77
    ours = rdflib.Graph().parse(nt, format="nt")
    theirs = rdflib.Graph().parse(ttl, format="turtle")
    if not rdflib.compare.isomorphic(ours, theirs):
        print("graphs differ")
        return 1
    with open(nt, encoding="utf-8") as f:
        lines = f.read().splitlines()
    if lines != sorted(lines, key=lambda s: s.encode("utf-8")):
        print("lines are not sorted bytewise")
        return 1
    print(f"{len(lines)} triples agree")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
