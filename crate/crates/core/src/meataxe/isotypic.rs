use super::chop::chop;
use super::hom::hom_basis;
use super::MeataxeError;
use crate::exactfield::{EchelonBasis, Matrix};
use crate::groupcore::{Elem, Subgroup};
use crate::repmod::{restrict, Representation};

#[derive(Clone, Debug)]
pub struct IsotypicComponent {
    /// The irreducible constituent of the restriction, as a representation of the normal subgroup.
    pub factor: Representation,
    /// Sum of the images of all homs from `factor` into the restriction.
    pub basis: Vec<Vec<u32>>,
    pub multiplicity: usize,
}

/// Homogeneous components of the restriction of a `G`-module to a normal
/// subgroup, with the permutation action of `G` on them.
#[derive(Clone, Debug)]
pub struct IsotypicDecomposition {
    pub ambient: Representation,
    pub group: Subgroup,
    pub components: Vec<IsotypicComponent>,
    /// `g_action[pos][i]`: the component that the member of `group` at
    /// position `pos` carries component `i` onto.
    pub g_action: Vec<Vec<usize>>,
}

impl IsotypicDecomposition {
    pub fn action(&self, g: Elem, component: usize) -> usize {
        let pos = self
            .group
            .position(g)
            .expect("element outside the acting group");
        self.g_action[pos][component]
    }

    /// Orbits of `G` on the components, each sorted, listed by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let k = self.components.len();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = self.g_action.iter().map(|row| row[start]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &i in &orbit {
                seen[i] = true;
            }
            out.push(orbit);
        }
        out
    }
}

pub fn isotypic_decomposition(
    v: &Representation,
    normal: &Subgroup,
) -> Result<IsotypicDecomposition, MeataxeError> {
    normal.normal_in(v.group())?;
    let field = v.field();
    let n = v.dim();
    let ambient = restrict(v, normal);
    let module = ambient.to_algebra_module();
    let classes = chop(&module)?.classes;
    let mut components = Vec::with_capacity(classes.len());
    let mut total = EchelonBasis::new(field, n);
    let mut socle = 0;
    for (factor, _) in classes {
        let hom = hom_basis(&factor, &module)?;
        let mut span = EchelonBasis::new(field, n);
        for t in &hom.basis {
            for col in t.columns() {
                span.insert(&col);
            }
        }
        let basis = span.into_vectors();
        socle += basis.len();
        for b in &basis {
            total.insert(b);
        }
        let factor_rep = Representation::from_generator_list(
            normal,
            field,
            factor.dim(),
            factor.generators().to_vec(),
        )?;
        components.push(IsotypicComponent {
            multiplicity: basis.len() / factor.dim(),
            factor: factor_rep,
            basis,
        });
    }
    if socle != n || total.len() != n {
        return Err(MeataxeError::NotSemisimple {
            socle: total.len(),
            dim: n,
        });
    }
    let spans: Vec<EchelonBasis> = components
        .iter()
        .map(|c| {
            let mut s = EchelonBasis::new(field, n);
            for b in &c.basis {
                s.insert(b);
            }
            s
        })
        .collect();
    let group = v.group().clone();
    let g_action = group
        .members()
        .iter()
        .map(|&g| {
            let rho: &Matrix = v.image(g);
            components
                .iter()
                .map(|c| {
                    let images: Vec<Vec<u32>> = c.basis.iter().map(|b| rho.mul_vec(b)).collect();
                    spans
                        .iter()
                        .position(|s| {
                            s.len() == c.basis.len() && images.iter().all(|w| s.contains(w))
                        })
                        .expect("G permutes the homogeneous components")
                })
                .collect()
        })
        .collect();
    Ok(IsotypicDecomposition {
        ambient,
        group,
        components,
        g_action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::PrimeField;
    use crate::groupcore::{catalog_entry, subgroup_generated};
    use crate::repmod::{induce, regular_rep, trivial_rep};

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn full_subgroup_gives_one_component() {
        let g = Subgroup::full(catalog_entry("S3").unwrap().into_arc());
        let d = isotypic_decomposition(&trivial_rep(&g, f(7)), &g).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].multiplicity, 1);
    }

    #[test]
    fn two_dim_s3_module_over_a3() {
        let t = catalog_entry("S3").unwrap().into_arc();
        let r = t.elements().find(|&e| t.label(e) == "(0 1 2)").unwrap();
        let s = t.elements().find(|&e| t.label(e) == "(0 1)").unwrap();
        let a3 = subgroup_generated(&t, &[r]);
        let w =
            Representation::from_generators(&a3, f(7), 1, &[(r, Matrix::from_rows(f(7), &[[2]]))])
                .unwrap();
        let v = induce(&w, &Subgroup::full(t.clone()));
        let d = isotypic_decomposition(&v, &a3).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d
            .components
            .iter()
            .all(|c| c.basis.len() == 1 && c.multiplicity == 1));
        assert_eq!(d.action(s, 0), 1);
        assert_eq!(d.action(r, 0), 0);
        assert_eq!(d.orbits(), vec![vec![0, 1]]);
    }

    #[test]
    fn regular_c4_over_c2() {
        let t = catalog_entry("C4").unwrap().into_arc();
        let g = Subgroup::full(t.clone());
        let c2 = subgroup_generated(&t, &[t.pow(1, 2)]);
        let d = isotypic_decomposition(&regular_rep(&g, f(3)), &c2).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d
            .components
            .iter()
            .all(|c| c.basis.len() == 2 && c.multiplicity == 2));
        assert_eq!(d.orbits(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn non_semisimple_restriction_is_reported() {
        let g = Subgroup::full(catalog_entry("C2").unwrap().into_arc());
        let err = isotypic_decomposition(&regular_rep(&g, f(2)), &g).unwrap_err();
        assert_eq!(err, MeataxeError::NotSemisimple { socle: 1, dim: 2 });
    }
}
