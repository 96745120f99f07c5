"""Normal form, mu table and (when Brunnian) kappa of one word.

    python3 scripts/mu_of_word.py 4 "[t1,t3,t2]^2 [t1,t2]"
"""

import sys

from linkhomotopy.kappa import kappa_coeffs
from linkhomotopy.mulinks import mu_table
from linkhomotopy.rfree import RFWord, brunnian_witness, normal_form
from linkhomotopy.words import parse_word


def main(argv):
    if len(argv) != 2:
        raise SystemExit(__doc__)
    n = int(argv[0])
    L = RFWord(parse_word(argv[1], n - 1), n)
    print("normal form:")
    print("  " + normal_form(L).to_text().replace("\n", "\n  "))
    print("mu:")
    for I, v in mu_table(L).items():
        if v:
            print(f"  mu({','.join(map(str, I))};{n}) = {v}")
    j = brunnian_witness(L)
    if j is None:
        print("kappa:", kappa_coeffs(L).values())
    else:
        print(f"not Brunnian (deleting strand {j} leaves a nontrivial link)")


if __name__ == "__main__":
    main(sys.argv[1:])
