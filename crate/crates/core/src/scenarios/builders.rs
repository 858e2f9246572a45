use std::sync::Arc;

use super::claims::{Claim, ClaimId, Expected};
use super::extension::FiniteExtension;
use super::{Scenario, ScenarioError};
use crate::exactfield::{Matrix, Polynomial, PrimeField};
use crate::groupcore::{cyclic, subgroup_generated, GroupTable, Subgroup};
use crate::repmod::{AlgebraModule, Representation};

fn claim(id: ClaimId, expected: Expected) -> Claim {
    Claim { id, expected }
}

fn field(p: u64) -> Result<PrimeField, ScenarioError> {
    PrimeField::new(p).map_err(|e| ScenarioError::Parameters(e.to_string()))
}

/// `G = C_{mn} = <x>`, `N = <x^m>` of order `n`, and `W` the character
/// `x^m -> a`, where `n` is the multiplicative order of `a` and `t^m - a`
/// is irreducible over `F_p`.
pub fn build_radical_example(p: u64, m: usize, a: u64) -> Result<Scenario, ScenarioError> {
    let f = field(p)?;
    if m < 2 {
        return Err(ScenarioError::Parameters(format!("degree {m} must exceed 1")));
    }
    let a_mod = f.reduce(a);
    if a_mod == 0 {
        return Err(ScenarioError::Parameters("a must be nonzero".into()));
    }
    let mut coeffs = vec![0; m + 1];
    coeffs[0] = f.neg(a_mod);
    coeffs[m] = 1;
    let poly = Polynomial::new(f, coeffs);
    if !poly.is_irreducible().unwrap_or(false) {
        return Err(ScenarioError::ReducibleRadical { p, m, a });
    }
    let n = f.element_order(a_mod) as usize;
    let table = cyclic(m * n).into_arc();
    let group = Subgroup::full(table.clone());
    let normal = subgroup_generated(&table, &[m % table.order()]);
    let module_w = Representation::from_generators(
        &normal,
        f,
        1,
        &[(m % table.order(), Matrix::from_vec(f, 1, 1, vec![a_mod]))],
    )
    .map_err(|e| ScenarioError::Parameters(e.to_string()))?;
    let order = table.order();
    Ok(Scenario {
        id: format!("radical-p{p}-m{m}-a{a}"),
        field: f,
        group,
        normal,
        module_w,
        expected: vec![
            claim(ClaimId::Invariant, Expected::Bool(true)),
            claim(ClaimId::InertiaOrder, Expected::Count(order)),
            claim(ClaimId::InducedIrreducible, Expected::Bool(true)),
            claim(ClaimId::EndFieldDegree, Expected::Count(m)),
            claim(ClaimId::Extends, Expected::Bool(false)),
            claim(ClaimId::Split, Expected::Bool(false)),
            claim(ClaimId::NarrHolding, Expected::Conditions(Vec::new())),
            claim(ClaimId::Stage1, Expected::Pass),
            claim(ClaimId::Correspondence, Expected::Pass),
        ],
        crossed: None,
    })
}

/// Factor set of a crossed product, as discrete logs to the primitive
/// element of the extension chosen by [`FiniteExtension::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorTable {
    Trivial,
    /// `logs[i][j]` is the log of `f(sigma^i, sigma^j)`; row and column 0
    /// must vanish.
    Logs(Vec<Vec<u64>>),
}

/// The algebra `(K, Gamma, f)` with `F_p`-basis `x_{sigma^j} t^i` at index
/// `j r + i`, through its left regular module.
#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub extension: FiniteExtension,
    /// `sigma` is the Frobenius map raised to this power.
    pub gamma_power: usize,
    pub gamma_order: usize,
    pub factor_logs: Vec<Vec<u64>>,
    /// Generated by left multiplication with the primitive element and with `x_sigma`.
    pub algebra: AlgebraModule,
}

impl CrossedProduct {
    pub fn dim(&self) -> usize {
        self.gamma_order * self.extension.degree()
    }

    /// `k` with `sigma^j = Frobenius^k`.
    pub fn frobenius_exponent(&self, j: usize) -> usize {
        (self.gamma_power * j) % self.extension.degree()
    }

    /// Index of `x_{sigma^j} primitive^e` in the group table.
    pub fn element(&self, j: usize, e: u64) -> usize {
        let units = self.extension.order() - 1;
        j * units as usize + (e % units) as usize
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    result
}

/// `G = K^* . Gamma` with `x_s k x_t l = x_{st} f(s,t) k^t l`, `N = K^*`,
/// and `W = K` with `N` acting by multiplication.
pub fn build_crossed_product(
    p: u64,
    r: usize,
    gamma_power: usize,
    factors: &FactorTable,
) -> Result<Scenario, ScenarioError> {
    let f = field(p)?;
    let ext = FiniteExtension::new(f, r)
        .ok_or_else(|| ScenarioError::Parameters("extension degree must be positive".into()))?;
    let gamma_order = r / gcd(r, gamma_power % r);
    let units = ext.order() - 1;
    let logs = match factors {
        FactorTable::Trivial => vec![vec![0; gamma_order]; gamma_order],
        FactorTable::Logs(rows) => {
            if rows.len() != gamma_order || rows.iter().any(|row| row.len() != gamma_order) {
                return Err(ScenarioError::Parameters(format!(
                    "factor table must be {gamma_order}x{gamma_order}"
                )));
            }
            rows.iter()
                .map(|row| row.iter().map(|&v| v % units).collect())
                .collect()
        }
    };
    if (0..gamma_order).any(|j| logs[0][j] != 0 || logs[j][0] != 0) {
        return Err(ScenarioError::Parameters(
            "factor table must be normalized".into(),
        ));
    }
    // Action of sigma^j on logs: multiplication by p^{gamma_power j}.
    let act: Vec<u64> = (0..gamma_order)
        .map(|j| pow_mod(p, (gamma_power * j % r) as u64, units))
        .collect();
    for s in 0..gamma_order {
        for t in 0..gamma_order {
            for u in 0..gamma_order {
                let st = (s + t) % gamma_order;
                let tu = (t + u) % gamma_order;
                let lhs = (logs[st][u] + logs[s][t] * act[u]) % units;
                let rhs = (logs[s][tu] + logs[t][u]) % units;
                if lhs != rhs {
                    return Err(ScenarioError::InvalidCocycle { s, t, u });
                }
            }
        }
    }
    let n = gamma_order * units as usize;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            let (j1, e1) = (a / units as usize, (a % units as usize) as u64);
            (0..n)
                .map(|b| {
                    let (j2, e2) = (b / units as usize, (b % units as usize) as u64);
                    let j = (j1 + j2) % gamma_order;
                    let e = (logs[j1][j2] + e1 * act[j2] + e2) % units;
                    j * units as usize + e as usize
                })
                .collect()
        })
        .collect();
    let q = ext.order();
    let table: Arc<GroupTable> = GroupTable::from_table(&rows)
        .map_err(|e| ScenarioError::Parameters(e.to_string()))?
        .with_name(format!("F{q}*.{gamma_order}"))
        .into_arc();
    let group = Subgroup::full(table.clone());
    let seeds: Vec<usize> = (0..units as usize).collect();
    let normal = subgroup_generated(&table, &seeds);
    let gens = normal
        .generators()
        .iter()
        .map(|&g| ext.multiplication_matrix(&ext.exp(g as u64)))
        .collect();
    let module_w = Representation::from_generator_list(&normal, f, r, gens)
        .map_err(|e| ScenarioError::Parameters(e.to_string()))?;

    let dim = gamma_order * r;
    let zeta = ext.primitive().to_vec();
    let mut by_zeta = Matrix::zeros(f, dim, dim);
    let mut by_x = Matrix::zeros(f, dim, dim);
    for j in 0..gamma_order {
        let twisted = ext.frobenius(&zeta, gamma_power * j % r);
        by_zeta.paste(j * r, j * r, &ext.multiplication_matrix(&twisted));
        let next = (j + 1) % gamma_order;
        let factor = ext.exp(logs[1 % gamma_order][j]);
        by_x.paste(next * r, j * r, &ext.multiplication_matrix(&factor));
    }
    let algebra = AlgebraModule::new(f, dim, vec![by_zeta, by_x], "crossed product");
    let split = gamma_order > 1;
    Ok(Scenario {
        id: format!("crossed-p{p}-r{r}-g{gamma_power}"),
        field: f,
        group,
        normal,
        module_w,
        expected: vec![
            claim(ClaimId::Invariant, Expected::Bool(true)),
            claim(ClaimId::InducedIrreducible, Expected::Bool(!split)),
            claim(ClaimId::CrossedDivision, Expected::Bool(!split)),
            claim(ClaimId::CrossedIff, Expected::Bool(true)),
            claim(ClaimId::EndDims, Expected::Record),
        ],
        crossed: Some(CrossedProduct {
            extension: ext,
            gamma_power,
            gamma_order,
            factor_logs: logs,
            algebra,
        }),
    })
}
