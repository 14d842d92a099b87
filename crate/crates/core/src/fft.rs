//! Minimal complex FFT machinery for the group Fourier transform.
//!
//! One-dimensional transforms dispatch on the length: powers of two run the
//! iterative radix-2 kernel, composites split off their smallest prime
//! factor (mixed-radix Cooley-Tukey), and primes above 5 fall back to
//! Bluestein's chirp-z algorithm so arbitrary cyclic factors stay
//! O(n log n). The multidimensional entry point applies the 1-d transform
//! along each cyclic factor of the group.

use std::f64::consts::PI;

use num_complex::Complex64;

/// In-place 1-d DFT. Forward kernel is `exp(-2 pi i j k / n)`; the inverse
/// conjugates and scales by `1/n`.
pub(crate) fn fft_1d(buf: &mut [Complex64], inverse: bool) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    if inverse {
        conjugate(buf);
        forward(buf);
        conjugate(buf);
        let s = 1.0 / n as f64;
        for v in buf.iter_mut() {
            *v *= s;
        }
    } else {
        forward(buf);
    }
}

/// Applies the 1-d transform along every cyclic factor of a mixed-radix
/// table (first factor most significant).
pub(crate) fn fft_multi(values: &mut [Complex64], factors: &[usize], inverse: bool) {
    let n = values.len();
    debug_assert_eq!(n, factors.iter().product::<usize>());
    let mut stride = n;
    let mut line = Vec::new();
    for &f in factors {
        stride /= f;
        if f == 1 {
            continue;
        }
        line.resize(f, Complex64::default());
        let block = f * stride;
        for start in (0..n).step_by(block) {
            for off in 0..stride {
                let base = start + off;
                for t in 0..f {
                    line[t] = values[base + t * stride];
                }
                fft_1d(&mut line[..f], inverse);
                for t in 0..f {
                    values[base + t * stride] = line[t];
                }
            }
        }
    }
}

fn conjugate(buf: &mut [Complex64]) {
    for v in buf.iter_mut() {
        *v = v.conj();
    }
}

fn forward(buf: &mut [Complex64]) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        radix2(buf);
        return;
    }
    let p = smallest_prime_factor(n);
    if p == n {
        if n <= 5 {
            naive_dft(buf);
        } else {
            bluestein(buf);
        }
    } else {
        cooley_tukey(buf, p);
    }
}

fn forward_roots(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|t| Complex64::from_polar(1.0, -2.0 * PI * t as f64 / n as f64))
        .collect()
}

fn smallest_prime_factor(n: usize) -> usize {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Iterative radix-2, bit-reversal order then butterflies.
fn radix2(buf: &mut [Complex64]) {
    let n = buf.len();
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let half: Vec<Complex64> = (0..n / 2)
        .map(|t| Complex64::from_polar(1.0, -2.0 * PI * t as f64 / n as f64))
        .collect();
    let mut len = 2;
    while len <= n {
        let step = n / len;
        let mut start = 0;
        while start < n {
            for k in 0..len / 2 {
                let w = half[k * step];
                let u = buf[start + k];
                let v = buf[start + k + len / 2] * w;
                buf[start + k] = u + v;
                buf[start + k + len / 2] = u - v;
            }
            start += len;
        }
        len <<= 1;
    }
}

/// Splits `n = p * m` off the smallest prime `p`: transform the `p` residue
/// subsequences of length `m`, then recombine with a naive `p`-point DFT on
/// twiddled spectra.
fn cooley_tukey(buf: &mut [Complex64], p: usize) {
    let n = buf.len();
    let m = n / p;
    let mut subs: Vec<Vec<Complex64>> = (0..p)
        .map(|d| {
            let mut s: Vec<Complex64> = (0..m).map(|j| buf[j * p + d]).collect();
            forward(&mut s);
            s
        })
        .collect();
    let w_n = forward_roots(n);
    let w_p = forward_roots(p);
    let mut z = vec![Complex64::default(); p];
    for kp in 0..m {
        for (d, sub) in subs.iter_mut().enumerate() {
            z[d] = w_n[(d * kp) % n] * sub[kp];
        }
        for kk in 0..p {
            let mut acc = Complex64::default();
            for (d, zd) in z.iter().enumerate() {
                acc += zd * w_p[(d * kk) % p];
            }
            buf[kk * m + kp] = acc;
        }
    }
}

fn naive_dft(buf: &mut [Complex64]) {
    let n = buf.len();
    let w = forward_roots(n);
    let input = buf.to_vec();
    for (k, out) in buf.iter_mut().enumerate() {
        let mut acc = Complex64::default();
        for (j, x) in input.iter().enumerate() {
            acc += x * w[(j * k) % n];
        }
        *out = acc;
    }
}

/// Bluestein's chirp-z: rewrites the DFT as a linear convolution against a
/// chirp, evaluated by zero-padded radix-2 FFTs of length `>= 2n - 1`.
fn bluestein(buf: &mut [Complex64]) {
    let n = buf.len();
    let l = (2 * n - 1).next_power_of_two();
    // c_j = exp(-pi i j^2 / n); reduce j^2 mod 2n to keep angles small
    let chirp: Vec<Complex64> = (0..n)
        .map(|j| {
            let e = (j * j) % (2 * n);
            Complex64::from_polar(1.0, -PI * e as f64 / n as f64)
        })
        .collect();
    let mut a = vec![Complex64::default(); l];
    for j in 0..n {
        a[j] = buf[j] * chirp[j];
    }
    let mut b = vec![Complex64::default(); l];
    b[0] = chirp[0].conj();
    for j in 1..n {
        let c = chirp[j].conj();
        b[j] = c;
        b[l - j] = c;
    }
    radix2(&mut a);
    radix2(&mut b);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= *y;
    }
    conjugate(&mut a);
    radix2(&mut a);
    conjugate(&mut a);
    let s = 1.0 / l as f64;
    for (k, out) in buf.iter_mut().enumerate() {
        *out = a[k] * s * chirp[k];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_reference(input: &[Complex64]) -> Vec<Complex64> {
        let n = input.len();
        (0..n)
            .map(|k| {
                let mut acc = Complex64::default();
                for (j, x) in input.iter().enumerate() {
                    let ang = -2.0 * PI * ((j * k) % n) as f64 / n as f64;
                    acc += x * Complex64::from_polar(1.0, ang);
                }
                acc
            })
            .collect()
    }

    fn ramp(n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|j| Complex64::new(j as f64 * 0.37 - 1.0, (j as f64).sin()))
            .collect()
    }

    #[test]
    fn matches_naive_on_assorted_lengths() {
        // powers of two, smooth composites, primes (Bluestein), prime powers
        for n in [
            1usize, 2, 3, 4, 5, 6, 7, 8, 11, 12, 16, 17, 20, 25, 31, 49, 64, 97,
        ] {
            let input = ramp(n);
            let mut buf = input.clone();
            fft_1d(&mut buf, false);
            let want = naive_reference(&input);
            for (got, want) in buf.iter().zip(&want) {
                assert!(
                    (got - want).norm() < 1e-9 * (1.0 + want.norm()),
                    "length {n}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn round_trip() {
        for n in [4usize, 12, 17, 30] {
            let input = ramp(n);
            let mut buf = input.clone();
            fft_1d(&mut buf, false);
            fft_1d(&mut buf, true);
            for (got, want) in buf.iter().zip(&input) {
                assert!((got - want).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn multi_axis_round_trip() {
        let factors = [3usize, 4, 2];
        let n: usize = factors.iter().product();
        let input = ramp(n);
        let mut buf = input.clone();
        fft_multi(&mut buf, &factors, false);
        fft_multi(&mut buf, &factors, true);
        for (got, want) in buf.iter().zip(&input) {
            assert!((got - want).norm() < 1e-10);
        }
    }
}
