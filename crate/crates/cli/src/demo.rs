//! Small worked walkthroughs with every intermediate value printed.

use gring::{
    block_circulant_tensor_matrix, block_circulant_tensor_tensor, circulant_matrix, natural_basis,
    natural_basis_degeneracy_witness, scalar_product, seeded_rng, tensor_from_hom,
    tensor_matrix_product, tensor_tensor_product, transposed_basis, CoefficientRing, Error,
    FiniteAbelianGroup, GroupMatrix, GroupRing, GroupTensor, ModuleHom,
};

use crate::{DemoKind, Outcome};

pub(crate) fn run<R: CoefficientRing>(
    kind: DemoKind,
    group: &FiniteAbelianGroup,
    ring: &R,
    seed: u64,
) -> Result<Outcome, Error> {
    match kind {
        DemoKind::Products => products(group, ring, seed),
        DemoKind::Basis => basis(group, ring),
        DemoKind::Iso => iso(group, ring, seed),
        DemoKind::Degenerate => degenerate(group, ring, seed),
    }
}

fn products<R: CoefficientRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    seed: u64,
) -> Result<Outcome, Error> {
    let vring = GroupRing::new(group.clone(), ring.clone());
    let mut rng = seeded_rng(seed);
    let a = vring.sample_element(&mut rng);
    let b = vring.sample_element(&mut rng);
    let x = GroupMatrix::sample(group, ring, &mut rng);
    let s = GroupTensor::sample(group, ring, &mut rng);
    let t = GroupTensor::sample(group, ring, &mut rng);

    println!(
        "convolution products on {} over {}",
        group,
        ring.spec_name()
    );
    println!();
    println!("a = {}", a.format());
    println!("b = {}", b.format());
    println!();
    println!("circ(a) =");
    print!("{}", circulant_matrix(&a).pretty());
    println!();

    let conv = a.convolve_naive(&b)?;
    let via_circ = circulant_matrix(&a).matvec(&b)?;
    let row1 = conv.eq_elem(&via_circ)?;
    println!("a * b       = {}", conv.format());
    println!("circ(a) . b = {}   equal: {row1}", via_circ.format());
    println!();

    let lhs = scalar_product(&a.anti_involution(), &x)?;
    let rhs = x.matmul(&circulant_matrix(&a))?;
    let row2 = lhs.eq_mat(&rhs)?;
    println!(
        "phi(a) o X vs X . circ(a):           equal: {row2} (residual {:.3e})",
        lhs.residual(&rhs)?
    );

    let lhs = tensor_matrix_product(&t, &x)?;
    let rhs = block_circulant_tensor_matrix(&t, &x)?;
    let row3 = lhs.eq_mat(&rhs)?;
    println!(
        "T * X vs blockcirc(T) . stacked(X):  equal: {row3} (residual {:.3e})",
        lhs.residual(&rhs)?
    );

    let lhs = tensor_tensor_product(&s, &t)?;
    let rhs = block_circulant_tensor_tensor(&s, &t)?;
    let row4 = lhs.eq_tensor(&rhs)?;
    println!(
        "S * T vs blockcirc(S) . stacked(T):  equal: {row4} (residual {:.3e})",
        lhs.residual(&rhs)?
    );

    Ok(Outcome {
        pass: row1 && row2 && row3 && row4,
    })
}

fn basis<R: CoefficientRing>(group: &FiniteAbelianGroup, ring: &R) -> Result<Outcome, Error> {
    let vring = GroupRing::new(group.clone(), ring.clone());
    println!("bases on {} over {}", group, ring.spec_name());
    println!();
    println!(
        "vector basis of V = R[{}]: |g| is 1 at the index of g",
        group
    );
    for g in group.elements() {
        let e = vring.basis_element(&g)?;
        println!("  |{}> = {}", g, e.format());
    }
    println!();
    println!("transposed module basis B_g = |g><1| (one 1 in column of 1_G):");
    for g in group.elements() {
        let b = transposed_basis(group, ring, &g)?;
        println!("B_{} =", g);
        print!("{}", b.matrix.pretty());
    }
    println!();
    println!("natural basis Bt_g = |1><g| (support confined to the identity row):");
    for g in group.elements() {
        let b = natural_basis(group, ring, &g)?;
        println!("Bt_{} =", g);
        print!("{}", b.matrix.pretty());
    }
    Ok(Outcome { pass: true })
}

fn iso<R: CoefficientRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    seed: u64,
) -> Result<Outcome, Error> {
    let mut rng = seeded_rng(seed);
    let l = ModuleHom::sample(group, ring, &mut rng);
    let t = tensor_from_hom(&l);
    println!(
        "homomorphism/tensor correspondence on {} over {}",
        group,
        ring.spec_name()
    );
    println!();
    println!("alpha table (L(B_h) = sum_g alpha_g_h o B_g):");
    let n = group.order();
    for g in 0..n {
        for h in 0..n {
            println!("  alpha[{g},{h}] = {}", l.alpha(g, h).format());
        }
    }
    println!();
    println!("tensor slices T_k with entries (alpha_j_h)_k:");
    for (k, slice) in t.slices().iter().enumerate() {
        println!("T_{k} =");
        print!("{}", slice.pretty());
    }
    println!();
    let a = GroupMatrix::sample(group, ring, &mut rng);
    println!("sample matrix A =");
    print!("{}", a.pretty());
    let via_hom = l.apply(&a)?;
    let via_tensor = tensor_matrix_product(&t, &a)?;
    let agree = via_hom.eq_mat(&via_tensor)?;
    println!("L(A) =");
    print!("{}", via_hom.pretty());
    println!("T * A =");
    print!("{}", via_tensor.pretty());
    println!(
        "agreement: {agree} (residual {:.3e})",
        via_hom.residual(&via_tensor)?
    );
    Ok(Outcome { pass: agree })
}

fn degenerate<R: CoefficientRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    seed: u64,
) -> Result<Outcome, Error> {
    if group.order() < 2 {
        return Err(Error::InapplicableWitness(
            "the trivial group has only the identity row".into(),
        ));
    }
    let vring = GroupRing::new(group.clone(), ring.clone());
    let mut rng = seeded_rng(seed);
    let a = vring.sample_element(&mut rng);
    println!(
        "natural-basis degeneracy on {} over {}",
        group,
        ring.spec_name()
    );
    println!();
    println!("a = {}", a.format());
    println!();
    println!("every combination a o Bt_g lands in the identity row alone:");
    for g in group.elements() {
        let bt = natural_basis(group, ring, &g)?;
        let m = scalar_product(&a, &bt.matrix)?;
        println!("a o Bt_{} =", g);
        print!("{}", m.pretty());
    }
    let target = GroupMatrix::unit(group, ring, 1, 0)?;
    println!("target |1><0| (nonzero outside the identity row):");
    print!("{}", target.pretty());
    let report = natural_basis_degeneracy_witness(&target, 100, seed)?;
    println!(
        "checked {} random combinations: support confined in {} of them",
        report.combinations, report.confined
    );
    println!(
        "natural-basis combinations reach the target: {}",
        report.target_reachable
    );
    Ok(Outcome {
        pass: report.support_confined && !report.target_reachable,
    })
}
