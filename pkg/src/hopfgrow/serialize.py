"""JSON-friendly encodings of scalars, group elements, and algebra elements.

Unit monomials whose root is an exact power of zeta_N serialize as
{"root": [a, d], "exps": [...]}, meaning zeta_N^a * prod q_i^{e_i} with d
the order of the root recorded as a sanity check.  Everything else falls
back to an explicit fraction of coefficient lists.
"""

from fractions import Fraction

from .elements import AlgebraElement


def _zeta_exponent(domain, root):
    for a in range(domain.conductor):
        if domain.field.zeta(a) == root:
            return a
    return None


def scalar_to_jsonable(s):
    um = s.as_unit_monomial()
    if um is not None:
        a = _zeta_exponent(s.domain, um.root)
        if a is not None:
            return {"root": [a, um.root.unity_order()], "exps": list(um.exps)}
    def lp(side):
        return [[list(e), [str(c) for c in coeff.coeffs]]
                for e, coeff in sorted(side.items())]
    return {"num": lp(s.num), "den": lp(s.den)}


def scalar_from_jsonable(domain, data):
    if isinstance(data, (int, str)):
        return domain.rational(Fraction(data))
    if "root" in data:
        a, claimed = data["root"]
        root = domain.field.zeta(a)
        if claimed is not None and root.unity_order() != claimed:
            raise ValueError(
                "scalar sanity check failed: zeta^%d has order %s, file says %s"
                % (a, root.unity_order(), claimed))
        exps = data.get("exps", [0] * domain.nvars)
        return domain.monomial(root, exps)
    def lp(side):
        out = domain.zero()
        for e, coeffs in side:
            c = domain.field.from_coeffs([Fraction(x) for x in coeffs])
            out = out + domain.monomial(c, e)
        return out
    num = lp(data["num"])
    den = lp(data.get("den", [[[0] * domain.nvars, ["1"]]]))
    return num / den


def scalar_to_str(s):
    return repr(s)


def scalar_to_expr(s):
    """Expression syntax for a scalar when one exists, else the plain repr.

    Single monomials with a coefficient of the form rational * zeta^a
    become literal products like '2/3 * zeta^2 * q1^-1'; anything else
    falls back to repr and will not re-parse.
    """
    if s.is_zero():
        return "0"
    if len(s.num) == 1 and len(s.den) == 1:
        (en, cn), = s.num.items()
        (ed, cd), = s.den.items()
        coeff = cn / cd
        exps = tuple(x - y for x, y in zip(en, ed))
        parts = []
        done = False
        if coeff.is_rational():
            if coeff.rational_value() != 1 or not any(exps):
                parts.append(str(coeff.rational_value()))
            done = True
        else:
            for a in range(1, s.domain.conductor):
                ratio = coeff / s.domain.field.zeta(a)
                if ratio.is_rational():
                    if ratio.rational_value() != 1:
                        parts.append(str(ratio.rational_value()))
                    parts.append("zeta^%d" % a)
                    done = True
                    break
        if done:
            for i, e in enumerate(exps):
                if e:
                    name = s.domain.transcendentals[i]
                    parts.append(name if e == 1 else "%s^%d" % (name, e))
            return " * ".join(parts) if parts else "1"
    return repr(s)


def group_to_str(group, h, names=None):
    return group.format_element(h, names)


def word_to_str(p, word):
    h, yw = word
    bits = []
    if not p.group.is_identity(h):
        bits.append(p.group.format_element(h))
    bits.extend(p.gens[i].name for i in yw)
    return " ".join(bits) if bits else "1"


def element_to_str(p, elt):
    if elt.is_zero():
        return "0"
    bits = []
    for word in elt.sorted_words(p.ny):
        c = elt.terms[word]
        cs = scalar_to_expr(c)
        ws = word_to_str(p, word)
        if cs == "1":
            bits.append(ws)
        elif ws == "1":
            bits.append(cs)
        else:
            if "+" in cs or " - " in cs:
                cs = "(%s)" % cs
            bits.append("%s * %s" % (cs, ws))
    return " + ".join(bits)


def element_to_jsonable(p, elt):
    return [{"word": word_to_str(p, w), "coeff": scalar_to_jsonable(c)}
            for w, c in sorted(elt.terms.items())]


def tensor_to_str(p, t):
    if t.is_zero():
        return "0"
    bits = []
    for (l, r) in sorted(t.terms.keys()):
        c = t.terms[(l, r)]
        cs = scalar_to_str(c)
        pair = "%s (x) %s" % (word_to_str(p, l), word_to_str(p, r))
        bits.append(pair if cs == "1" else "%s * [%s]" % (cs, pair))
    return " + ".join(bits)
