use std::sync::Arc;

use super::poly::same_algebra;
use super::{NcPoly, PbwError, Presentation};

/// An algebra map given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: Vec<NcPoly>,
}

impl AlgebraHom {
    /// Builds the map without checking the relations; see [`AlgebraHom::verify`].
    pub fn new(source: &Arc<Presentation>, target: &Arc<Presentation>, images: Vec<NcPoly>) -> Result<Self, PbwError> {
        if images.len() != source.ngens() {
            return Err(PbwError::ImageCount { expected: source.ngens(), got: images.len() });
        }
        if source.space() != target.space() {
            return Err(PbwError::ParamSpaceMismatch);
        }
        if images.iter().any(|p| !same_algebra(p.algebra(), target)) {
            return Err(PbwError::PresentationMismatch);
        }
        Ok(AlgebraHom { source: source.clone(), target: target.clone(), images })
    }

    /// Like [`AlgebraHom::new`] but rejects maps that break a defining relation.
    pub fn verified(
        source: &Arc<Presentation>,
        target: &Arc<Presentation>,
        images: Vec<NcPoly>,
    ) -> Result<Self, PbwError> {
        let h = Self::new(source, target, images)?;
        match h.first_broken_relation() {
            None => Ok(h),
            Some((u, v)) => Err(PbwError::NotAHomomorphism(source.describe_rule(u, v))),
        }
    }

    /// Generator-to-generator map `g_k ↦ target generator mapping[k]`.
    pub fn positional(
        source: &Arc<Presentation>,
        target: &Arc<Presentation>,
        mapping: &[usize],
    ) -> Result<Self, PbwError> {
        let images = mapping.iter().map(|&t| NcPoly::generator(target, t)).collect();
        Self::new(source, target, images)
    }

    pub fn identity(alg: &Arc<Presentation>) -> Self {
        let images = (0..alg.ngens()).map(|g| NcPoly::generator(alg, g)).collect();
        AlgebraHom { source: alg.clone(), target: alg.clone(), images }
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn images(&self) -> &[NcPoly] {
        &self.images
    }

    /// True iff every source straightening rule maps to zero in the target.
    pub fn verify(&self) -> bool {
        self.first_broken_relation().is_none()
    }

    fn first_broken_relation(&self) -> Option<(usize, usize)> {
        for ((u, v), rule) in self.source.rules() {
            let hu = &self.images[u];
            let hv = &self.images[v];
            let mut residual = &(hu * hv) - &(hv * hu).scale(&rule.swap);
            for (c, m) in &rule.corrections {
                residual = &residual - &self.image_of_word(&m.word()).scale(c);
            }
            if !residual.is_zero() {
                return Some((u, v));
            }
        }
        None
    }

    fn image_of_word(&self, word: &[usize]) -> NcPoly {
        let mut acc = NcPoly::one(&self.target);
        for &g in word {
            acc = &acc * &self.images[g];
        }
        acc
    }

    /// `h(p)`, linear and multiplicative on the PBW basis.
    pub fn apply(&self, p: &NcPoly) -> Result<NcPoly, PbwError> {
        if !same_algebra(p.algebra(), &self.source) {
            return Err(PbwError::PresentationMismatch);
        }
        let mut out = NcPoly::zero(&self.target);
        for (m, c) in p.terms() {
            let img = self.image_of_word(&m.word());
            out = &out + &img.scale(c);
        }
        Ok(out)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraHom) -> Result<AlgebraHom, PbwError> {
        if !same_algebra(&self.target, &other.source) {
            return Err(PbwError::PresentationMismatch);
        }
        let images = self.images.iter().map(|p| other.apply(p)).collect::<Result<Vec<_>, _>>()?;
        Ok(AlgebraHom { source: self.source.clone(), target: other.target.clone(), images })
    }
}
