"""Dense polynomial arithmetic over F_{p^d}, numpy-backed.  Internal.

An element of F_{p^d} = F_p[y]/(m) is a length-d int64 vector of residues
mod p (coefficients of the class mod the level's defining polynomial m).  A
polynomial over F_{p^d} is an (n+1, d) array whose row i is the coefficient
of x^i; trailing zero rows are trimmed and the zero polynomial has 0 rows.

Products pack both operands into one 1-D array with y-stride 2d-1 so a single
np.convolve does the whole bivariate multiply exactly (coefficient sums stay
far below 2**63), then the y-axis is folded mod m.  Everything here is exact.
"""

import numpy as np


def fp_inv(a, p):
    return pow(int(a), p - 2, p)


class Kernel:
    """Arithmetic for one tower level: F_{p^d} elements and polys over them."""

    def __init__(self, p, modulus):
        self.p = p
        self.modulus = np.asarray(modulus, dtype=np.int64) % p
        self.modulus[-1] = 1  # monic by construction
        self.d = len(modulus) - 1
        self.width = 2 * self.d - 1
        d = self.d
        self.e_zero = np.zeros(d, dtype=np.int64)
        self.e_one = np.zeros(d, dtype=np.int64)
        self.e_one[0] = 1
        self.zero_poly = np.zeros((0, d), dtype=np.int64)
        self.one_poly = self.e_one.reshape(1, d).copy()
        # red[i] = coords of y^(d+i) mod m, used to fold convolution overflow
        self.red = np.zeros((max(d - 1, 0), d), dtype=np.int64)
        if d > 1:
            y_d = (-self.modulus[:-1]) % p
            cur = y_d.copy()
            for i in range(d - 1):
                self.red[i] = cur
                top = cur[-1]
                shifted = np.zeros(d, dtype=np.int64)
                shifted[1:] = cur[:-1]
                cur = (shifted + top * y_d) % p
        self._frob = None
        self._frob_inv = None

    # ---- element ops: vectors of shape (d,) ----

    def e_reduce_wide(self, c):
        # c has length <= 2d-1
        d = self.d
        if len(c) <= d:
            out = np.zeros(d, dtype=np.int64)
            out[: len(c)] = c
            return out % self.p
        return (c[:d] + c[d:] @ self.red[: len(c) - d]) % self.p

    def e_mul(self, a, b):
        if self.d == 1:
            return (a * b) % self.p
        return self.e_reduce_wide(np.convolve(a, b))

    def e_pow(self, a, n):
        if n < 0:
            return self.e_pow(self.e_inv(a), -n)
        acc = self.e_one.copy()
        base = a % self.p
        while n:
            if n & 1:
                acc = self.e_mul(acc, base)
            base = self.e_mul(base, base)
            n >>= 1
        return acc

    def e_inv(self, a):
        p = self.p
        if self.d == 1:
            v = int(a[0]) % p
            if v == 0:
                raise ZeroDivisionError("inverse of zero")
            return np.array([fp_inv(v, p)], dtype=np.int64)
        # extended Euclid in F_p[y] against the modulus
        r0 = [int(x) % p for x in self.modulus]
        r1 = [int(x) % p for x in a]
        s0, s1 = [0], [1]
        while len(r1) > 1 or (r1 and r1[0] != 0):
            while r1 and r1[-1] == 0:
                r1.pop()
            if not r1:
                break
            if len(r0) < len(r1):
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            q_lead = (r0[-1] * fp_inv(r1[-1], p)) % p
            shift = len(r0) - len(r1)
            for i, c in enumerate(r1):
                r0[i + shift] = (r0[i + shift] - q_lead * c) % p
            while len(s0) < shift + len(s1):
                s0.append(0)
            for i, c in enumerate(s1):
                s0[i + shift] = (s0[i + shift] - q_lead * c) % p
            while r0 and r0[-1] == 0:
                r0.pop()
            if len(r0) < len(r1):
                r0, r1, s0, s1 = r1, r0, s1, s0
        while r0 and r0[-1] == 0:
            r0.pop()
        if len(r0) != 1:
            raise ZeroDivisionError("inverse of zero")
        scale = fp_inv(r0[0], p)
        out = np.zeros(self.d, dtype=np.int64)
        for i, c in enumerate(s0[: self.d]):
            out[i] = (c * scale) % p
        return out

    def frob_matrix(self):
        # column j holds (y^j)^p mod m; Frobenius is F_p-linear on coords
        if self._frob is None:
            d = self.d
            cols = [self.e_one.copy()]
            yp = self.e_pow(self.gen_vec(), self.p)
            for _ in range(1, d):
                cols.append(self.e_mul(cols[-1], yp))
            self._frob = np.stack(cols, axis=1)
        return self._frob

    def e_frob(self, a, times=1):
        F = self.frob_matrix()
        out = a
        for _ in range(times % self.d if self.d > 1 else 0):
            out = (F @ out) % self.p
        return out % self.p

    def e_pth_root(self, a):
        # Frobenius has order d, so its inverse is d-1 more applications
        return self.e_frob(a, self.d - 1) if self.d > 1 else a % self.p

    def gen_vec(self):
        v = np.zeros(self.d, dtype=np.int64)
        if self.d > 1:
            v[1] = 1
        return v

    # ---- poly ops: arrays of shape (n+1, d) ----

    def trim(self, A):
        if len(A) == 0:
            return A
        nz = np.nonzero(A.any(axis=1))[0]
        if len(nz) == 0:
            return A[:0]
        return A[: nz[-1] + 1]

    def deg(self, A):
        return len(A) - 1

    def p_from_rows(self, rows):
        if not rows:
            return self.zero_poly
        return self.trim(np.array(rows, dtype=np.int64) % self.p)

    def p_add(self, A, B):
        n = max(len(A), len(B))
        out = np.zeros((n, self.d), dtype=np.int64)
        out[: len(A)] += A
        out[: len(B)] += B
        return self.trim(out % self.p)

    def p_sub(self, A, B):
        n = max(len(A), len(B))
        out = np.zeros((n, self.d), dtype=np.int64)
        out[: len(A)] += A
        out[: len(B)] -= B
        return self.trim(out % self.p)

    def p_mul(self, A, B):
        if len(A) == 0 or len(B) == 0:
            return self.zero_poly
        d, W = self.d, self.width
        a = np.zeros((len(A), W), dtype=np.int64)
        a[:, :d] = A
        b = np.zeros((len(B), W), dtype=np.int64)
        b[:, :d] = B
        c = np.convolve(a.ravel(), b.ravel())
        n = len(A) + len(B) - 1
        full = np.zeros(n * W, dtype=np.int64)
        m = min(len(c), n * W)
        full[:m] = c[:m]  # tail of c beyond n*W is structurally zero
        c2 = full.reshape(n, W)
        if d == 1:
            return self.trim(c2 % self.p)
        if self.p >= (1 << 10):
            # pre-reduce so the fold below cannot overflow int64
            c2 %= self.p
        out = (c2[:, :d] + c2[:, d:] @ self.red) % self.p
        return self.trim(out)

    def p_scale(self, A, c):
        if len(A) == 0 or not c.any():
            return self.zero_poly
        return self.p_mul(A, c.reshape(1, self.d))

    def mul_matrix(self, q):
        # M[:, j] = coords(q * y^j), so q*v == M @ v
        d = self.d
        cols = [q % self.p]
        for _ in range(1, d):
            prev = cols[-1]
            shifted = np.zeros(d, dtype=np.int64)
            shifted[1:] = prev[:-1]
            cols.append((shifted + prev[-1] * self.red[0]) % self.p if d > 1 else shifted)
        return np.stack(cols, axis=1)

    def p_divmod(self, A, B):
        if len(B) == 0:
            raise ZeroDivisionError("polynomial division by zero")
        A = self.trim(A)
        if len(A) < len(B):
            return self.zero_poly, A.copy()
        lead_inv = self.e_inv(B[-1])
        R = A.copy()
        nq = len(A) - len(B) + 1
        Q = np.zeros((nq, self.d), dtype=np.int64)
        for i in range(nq - 1, -1, -1):
            top = R[i + len(B) - 1]
            if not top.any():
                continue
            q = self.e_mul(top, lead_inv)
            Q[i] = q
            M = self.mul_matrix(q)
            R[i : i + len(B)] = (R[i : i + len(B)] - B @ M.T) % self.p
        return self.trim(Q), self.trim(R[: len(B) - 1])

    def p_mod(self, A, B):
        return self.p_divmod(A, B)[1]

    def p_monic(self, A):
        A = self.trim(A)
        if len(A) == 0:
            return A
        lead = A[-1]
        if self.d == 1:
            if lead[0] == 1:
                return A
        elif lead[0] == 1 and not lead[1:].any():
            return A
        return self.p_scale(A, self.e_inv(lead))

    def p_gcd(self, A, B):
        A, B = self.trim(A), self.trim(B)
        while len(B):
            A, B = B, self.p_mod(A, B)
        return self.p_monic(A)

    def mod_reducer(self, M):
        """A fast reducer mod M for products of two residues.

        Returns a callable taking a trimmed poly of degree < 2 deg M - 1
        and returning it mod M.  The reduction is a single matrix product
        against precomputed rows x^(deg M + i) mod M, flattened per y-digit,
        so repeated reductions against one modulus avoid the division loop.
        """
        M = self.p_monic(self.trim(M))
        n = len(M) - 1
        d = self.d
        if n <= 0:
            return lambda A: self.zero_poly
        rows = []
        cur = (-M[:-1]) % self.p
        for _ in range(n - 1):
            rows.append(cur)
            top = cur[-1].copy()
            nxt = np.zeros((n, d), dtype=np.int64)
            nxt[1:] = cur[:-1]
            if top.any():
                nxt = (nxt + rows[0] @ self.mul_matrix(top).T) % self.p
            cur = nxt
        blocks = []
        for row in rows:
            shifted = row
            for _ in range(d):
                blocks.append(shifted.ravel())
                if d > 1:
                    carried = np.zeros((n, d), dtype=np.int64)
                    carried[:, 1:] = shifted[:, :-1]
                    carried += np.outer(shifted[:, -1], self.red[0])
                    shifted = carried % self.p
        big = (
            np.array(blocks, dtype=np.int64)
            if blocks
            else np.zeros((0, n * d), dtype=np.int64)
        )

        def reduce(A):
            if len(A) <= n:
                return A
            low = np.zeros(n * d, dtype=np.int64)
            low[: n * d] = A[:n].ravel()
            high = A[n:].ravel()
            out = (low + high @ big[: len(high)]) % self.p
            return self.trim(out.reshape(n, d))

        return reduce

    def p_powmod(self, A, n, M):
        reduce = self.mod_reducer(M)
        acc = self.one_poly.copy()
        base = reduce(self.p_mod(A, M))
        while n:
            if n & 1:
                acc = reduce(self.p_mul(acc, base))
            base = reduce(self.p_mul(base, base))
            n >>= 1
        return acc

    def p_deriv(self, A):
        if len(A) <= 1:
            return self.zero_poly
        ks = (np.arange(1, len(A)) % self.p).reshape(-1, 1)
        return self.trim((A[1:] * ks) % self.p)

    def p_div_linear(self, A, r):
        # exact division by (x - r); returns (quotient, remainder element)
        n = len(A) - 1
        Q = np.zeros((max(n, 0), self.d), dtype=np.int64)
        acc = A[n].copy()
        for i in range(n - 1, -1, -1):
            Q[i] = acc
            acc = (self.e_mul(acc, r) + A[i]) % self.p
        return self.trim(Q), acc

    def x_poly(self):
        out = np.zeros((2, self.d), dtype=np.int64)
        out[1] = self.e_one
        return out
