//! Grid data types and the `VVOL/1` binary volume format.
//!
//! Axis order is fixed as `(H, W, L)` with the last axis fastest in memory.
//! Displacement components `(u_x, u_y, u_z)` follow the same axis order
//! (`H -> x`, `W -> y`, `L -> z`). All objects are immutable after
//! construction as far as the pipeline is concerned; nothing here holds
//! interior mutability, so sharing across threads is safe.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use byteorder::{ByteOrder, LittleEndian};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on a single payload; desk-scale volumes are far below this.
const MAX_PAYLOAD_BYTES: u64 = 1 << 30;
/// Hard cap on the JSON header line.
const MAX_HEADER_BYTES: usize = 64 * 1024;

/// Dense scalar 3D grid with one or more channels.
///
/// `data` is indexed `[channel][h][w][l]`, `l` fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct Volume {
    pub shape: [usize; 3],
    pub channels: usize,
    pub data: Vec<f32>,
}

/// Integer region labels on a grid (0 = background).
#[derive(Clone, Debug, PartialEq)]
pub struct LabelMap {
    pub shape: [usize; 3],
    pub data: Vec<i32>,
}

/// Per-voxel displacement 3-vectors in voxel units of the field's own
/// resolution. Stored component-major: all `u_x`, then `u_y`, then `u_z`.
/// The implied sampling grid is `G(p) = p + u(p)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DisplacementField {
    pub shape: [usize; 3],
    pub data: Vec<f32>,
}

fn numel(shape: [usize; 3]) -> usize {
    shape[0] * shape[1] * shape[2]
}

impl Volume {
    pub fn zeros(shape: [usize; 3], channels: usize) -> Self {
        Volume {
            shape,
            channels,
            data: vec![0.0; channels * numel(shape)],
        }
    }

    pub fn from_data(shape: [usize; 3], channels: usize, data: Vec<f32>) -> Self {
        assert_eq!(
            data.len(),
            channels * numel(shape),
            "data length must equal channels * H * W * L"
        );
        Volume {
            shape,
            channels,
            data,
        }
    }

    /// Build a single-channel volume from a per-voxel function of (h, w, l).
    pub fn from_fn(shape: [usize; 3], mut f: impl FnMut(usize, usize, usize) -> f32) -> Self {
        let mut data = Vec::with_capacity(numel(shape));
        for h in 0..shape[0] {
            for w in 0..shape[1] {
                for l in 0..shape[2] {
                    data.push(f(h, w, l));
                }
            }
        }
        Volume {
            shape,
            channels: 1,
            data,
        }
    }

    pub fn voxels(&self) -> usize {
        numel(self.shape)
    }

    #[inline]
    pub fn idx(&self, c: usize, h: usize, w: usize, l: usize) -> usize {
        ((c * self.shape[0] + h) * self.shape[1] + w) * self.shape[2] + l
    }

    #[inline]
    pub fn at(&self, c: usize, h: usize, w: usize, l: usize) -> f32 {
        self.data[self.idx(c, h, w, l)]
    }

    pub fn min_max(&self) -> (f32, f32) {
        let mut mn = f32::INFINITY;
        let mut mx = f32::NEG_INFINITY;
        for &v in &self.data {
            mn = mn.min(v);
            mx = mx.max(v);
        }
        (mn, mx)
    }
}

impl LabelMap {
    pub fn zeros(shape: [usize; 3]) -> Self {
        LabelMap {
            shape,
            data: vec![0; numel(shape)],
        }
    }

    pub fn from_data(shape: [usize; 3], data: Vec<i32>) -> Self {
        assert_eq!(data.len(), numel(shape));
        LabelMap { shape, data }
    }

    #[inline]
    pub fn idx(&self, h: usize, w: usize, l: usize) -> usize {
        (h * self.shape[1] + w) * self.shape[2] + l
    }

    #[inline]
    pub fn at(&self, h: usize, w: usize, l: usize) -> i32 {
        self.data[self.idx(h, w, l)]
    }

    /// Sorted distinct labels, background (0) excluded.
    pub fn labels(&self) -> Vec<i32> {
        let mut ls: Vec<i32> = self.data.iter().copied().filter(|&v| v != 0).collect();
        ls.sort_unstable();
        ls.dedup();
        ls
    }
}

impl DisplacementField {
    pub fn zeros(shape: [usize; 3]) -> Self {
        DisplacementField {
            shape,
            data: vec![0.0; 3 * numel(shape)],
        }
    }

    pub fn from_data(shape: [usize; 3], data: Vec<f32>) -> Self {
        assert_eq!(data.len(), 3 * numel(shape));
        DisplacementField { shape, data }
    }

    pub fn constant(shape: [usize; 3], u: [f32; 3]) -> Self {
        let n = numel(shape);
        let mut data = Vec::with_capacity(3 * n);
        for comp in u {
            data.extend(std::iter::repeat(comp).take(n));
        }
        DisplacementField { shape, data }
    }

    pub fn voxels(&self) -> usize {
        numel(self.shape)
    }

    #[inline]
    pub fn idx(&self, comp: usize, h: usize, w: usize, l: usize) -> usize {
        ((comp * self.shape[0] + h) * self.shape[1] + w) * self.shape[2] + l
    }

    #[inline]
    pub fn at(&self, h: usize, w: usize, l: usize) -> [f32; 3] {
        let n = numel(self.shape);
        let i = (h * self.shape[1] + w) * self.shape[2] + l;
        [self.data[i], self.data[n + i], self.data[2 * n + i]]
    }

    pub fn max_abs(&self) -> f32 {
        self.data.iter().fold(0.0f32, |m, &v| m.max(v.abs()))
    }
}

/// Any object the VVOL format can carry.
#[derive(Clone, Debug, PartialEq)]
pub enum VolObject {
    Image(Volume),
    Labels(LabelMap),
    Field(DisplacementField),
}

impl VolObject {
    pub fn kind(&self) -> &'static str {
        match self {
            VolObject::Image(_) => "image",
            VolObject::Labels(_) => "labels",
            VolObject::Field(_) => "field",
        }
    }

    pub fn into_image(self) -> Result<Volume> {
        match self {
            VolObject::Image(v) => Ok(v),
            other => Err(Error::MalformedHeader {
                field: "kind",
                reason: format!("expected kind `image`, found `{}`", other.kind()),
            }),
        }
    }

    pub fn into_labels(self) -> Result<LabelMap> {
        match self {
            VolObject::Labels(v) => Ok(v),
            other => Err(Error::MalformedHeader {
                field: "kind",
                reason: format!("expected kind `labels`, found `{}`", other.kind()),
            }),
        }
    }

    pub fn into_field(self) -> Result<DisplacementField> {
        match self {
            VolObject::Field(v) => Ok(v),
            other => Err(Error::MalformedHeader {
                field: "kind",
                reason: format!("expected kind `field`, found `{}`", other.kind()),
            }),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VvolHeader {
    magic: String,
    version: u32,
    kind: String,
    shape: [u64; 3],
    channels: u64,
    dtype: String,
    order: String,
}

/// Min-max normalize an image volume to `[0, 1]`.
///
/// Errors on a constant volume. Idempotent on its own output: the second
/// pass sees min 0 and max 1 and maps every value to itself bit-exactly.
pub fn normalize_minmax(v: &Volume) -> Result<Volume> {
    let (mn, mx) = v.min_max();
    if !(mx > mn) {
        return Err(Error::ConstantVolume);
    }
    let range = mx - mn;
    let data = v.data.iter().map(|&x| (x - mn) / range).collect();
    Ok(Volume {
        shape: v.shape,
        channels: v.channels,
        data,
    })
}

fn crop_start(src: [usize; 3], target: [usize; 3]) -> Result<[usize; 3]> {
    for a in 0..3 {
        if target[a] > src[a] {
            return Err(Error::CropTooLarge {
                target,
                source: src,
            });
        }
    }
    // Ties break toward the lower index: floor of the half-margin.
    Ok([
        (src[0] - target[0]) / 2,
        (src[1] - target[1]) / 2,
        (src[2] - target[2]) / 2,
    ])
}

/// Center-crop a volume to `target` shape, ties broken toward lower indices.
pub fn center_crop(v: &Volume, target: [usize; 3]) -> Result<Volume> {
    let start = crop_start(v.shape, target)?;
    let mut data = Vec::with_capacity(v.channels * numel(target));
    for c in 0..v.channels {
        for h in 0..target[0] {
            for w in 0..target[1] {
                let base = v.idx(c, start[0] + h, start[1] + w, start[2]);
                data.extend_from_slice(&v.data[base..base + target[2]]);
            }
        }
    }
    Ok(Volume {
        shape: target,
        channels: v.channels,
        data,
    })
}

/// Center-crop a label map to `target` shape, same tie-break rule.
pub fn center_crop_labels(m: &LabelMap, target: [usize; 3]) -> Result<LabelMap> {
    let start = crop_start(m.shape, target)?;
    let mut data = Vec::with_capacity(numel(target));
    for h in 0..target[0] {
        for w in 0..target[1] {
            let base = m.idx(start[0] + h, start[1] + w, start[2]);
            data.extend_from_slice(&m.data[base..base + target[2]]);
        }
    }
    Ok(LabelMap {
        shape: target,
        data,
    })
}

fn header_for(obj: &VolObject) -> VvolHeader {
    let (kind, shape, channels, dtype) = match obj {
        VolObject::Image(v) => ("image", v.shape, v.channels, "f32"),
        VolObject::Labels(m) => ("labels", m.shape, 1, "i32"),
        VolObject::Field(f) => ("field", f.shape, 3, "f32"),
    };
    VvolHeader {
        magic: "VVOL".to_string(),
        version: 1,
        kind: kind.to_string(),
        shape: [shape[0] as u64, shape[1] as u64, shape[2] as u64],
        channels: channels as u64,
        dtype: dtype.to_string(),
        order: "C".to_string(),
    }
}

/// Serialize an object to VVOL/1 bytes: one JSON header line, then the raw
/// little-endian payload, channel-major, C order.
pub fn to_vvol_bytes(obj: &VolObject) -> Vec<u8> {
    let header = header_for(obj);
    let mut out = serde_json::to_vec(&header).expect("header serialization cannot fail");
    out.push(b'\n');
    match obj {
        VolObject::Image(v) => {
            let mut buf = vec![0u8; v.data.len() * 4];
            LittleEndian::write_f32_into(&v.data, &mut buf);
            out.extend_from_slice(&buf);
        }
        VolObject::Field(f) => {
            let mut buf = vec![0u8; f.data.len() * 4];
            LittleEndian::write_f32_into(&f.data, &mut buf);
            out.extend_from_slice(&buf);
        }
        VolObject::Labels(m) => {
            let mut buf = vec![0u8; m.data.len() * 4];
            LittleEndian::write_i32_into(&m.data, &mut buf);
            out.extend_from_slice(&buf);
        }
    }
    out
}

/// Parse a VVOL/1 object from bytes. Every header field is validated and
/// named on error; the payload length must match the header exactly.
pub fn from_vvol_bytes(bytes: &[u8]) -> Result<VolObject> {
    let nl = bytes
        .iter()
        .take(MAX_HEADER_BYTES + 1)
        .position(|&b| b == b'\n')
        .ok_or(Error::MalformedHeader {
            field: "header",
            reason: "no newline-terminated JSON header line found".to_string(),
        })?;
    let header: VvolHeader =
        serde_json::from_slice(&bytes[..nl]).map_err(|e| Error::MalformedHeader {
            field: "header",
            reason: format!("invalid JSON: {e}"),
        })?;
    if header.magic != "VVOL" {
        return Err(Error::MalformedHeader {
            field: "magic",
            reason: format!("expected \"VVOL\", found {:?}", header.magic),
        });
    }
    if header.version != 1 {
        return Err(Error::MalformedHeader {
            field: "version",
            reason: format!("unsupported version {}", header.version),
        });
    }
    if header.order != "C" {
        return Err(Error::MalformedHeader {
            field: "order",
            reason: format!("unsupported order {:?}", header.order),
        });
    }
    for (a, &s) in header.shape.iter().enumerate() {
        if s == 0 {
            return Err(Error::MalformedHeader {
                field: "shape",
                reason: format!("axis {a} has zero extent"),
            });
        }
    }
    if header.channels == 0 {
        return Err(Error::MalformedHeader {
            field: "channels",
            reason: "zero channels".to_string(),
        });
    }
    let count = header.shape[0]
        .checked_mul(header.shape[1])
        .and_then(|p| p.checked_mul(header.shape[2]))
        .and_then(|p| p.checked_mul(header.channels))
        .ok_or(Error::MalformedHeader {
            field: "shape",
            reason: "element count overflows".to_string(),
        })?;
    let payload_bytes = count.checked_mul(4).filter(|&b| b <= MAX_PAYLOAD_BYTES).ok_or(
        Error::MalformedHeader {
            field: "shape",
            reason: format!("payload of {count} elements exceeds the supported size"),
        },
    )?;
    let payload = &bytes[nl + 1..];
    let expected = payload_bytes as usize;
    if payload.len() < expected {
        return Err(Error::TruncatedPayload {
            expected,
            actual: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Error::TrailingData {
            extra: payload.len() - expected,
        });
    }
    let shape = [
        header.shape[0] as usize,
        header.shape[1] as usize,
        header.shape[2] as usize,
    ];
    let channels = header.channels as usize;
    let n = count as usize;

    match header.kind.as_str() {
        "image" => {
            if header.dtype != "f32" {
                return Err(Error::UnsupportedDtype {
                    dtype: header.dtype,
                    kind: header.kind,
                });
            }
            let mut data = vec![0.0f32; n];
            LittleEndian::read_f32_into(payload, &mut data);
            Ok(VolObject::Image(Volume {
                shape,
                channels,
                data,
            }))
        }
        "labels" => {
            if header.dtype != "i32" {
                return Err(Error::UnsupportedDtype {
                    dtype: header.dtype,
                    kind: header.kind,
                });
            }
            if channels != 1 {
                return Err(Error::MalformedHeader {
                    field: "channels",
                    reason: format!("labels require channels 1, found {channels}"),
                });
            }
            let mut data = vec![0i32; n];
            LittleEndian::read_i32_into(payload, &mut data);
            Ok(VolObject::Labels(LabelMap { shape, data }))
        }
        "field" => {
            if header.dtype != "f32" {
                return Err(Error::UnsupportedDtype {
                    dtype: header.dtype,
                    kind: header.kind,
                });
            }
            if channels != 3 {
                return Err(Error::MalformedHeader {
                    field: "channels",
                    reason: format!("fields require channels 3, found {channels}"),
                });
            }
            let mut data = vec![0.0f32; n];
            LittleEndian::read_f32_into(payload, &mut data);
            Ok(VolObject::Field(DisplacementField { shape, data }))
        }
        other => Err(Error::MalformedHeader {
            field: "kind",
            reason: format!("unknown kind {other:?}"),
        }),
    }
}

/// Load a VVOL/1 file.
pub fn load_volume(path: &Path) -> Result<VolObject> {
    let mut reader = BufReader::new(File::open(path)?);
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    from_vvol_bytes(&bytes)
}

/// Save an object as a VVOL/1 file. Round-trips bit-exactly through
/// [`load_volume`].
pub fn save_volume(obj: &VolObject, path: &Path) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    writer.write_all(&to_vvol_bytes(obj))?;
    writer.flush()?;
    Ok(())
}

pub fn save_image(v: &Volume, path: &Path) -> Result<()> {
    save_volume(&VolObject::Image(v.clone()), path)
}

pub fn save_labels(m: &LabelMap, path: &Path) -> Result<()> {
    save_volume(&VolObject::Labels(m.clone()), path)
}

pub fn save_field(f: &DisplacementField, path: &Path) -> Result<()> {
    save_volume(&VolObject::Field(f.clone()), path)
}

pub fn load_image(path: &Path) -> Result<Volume> {
    load_volume(path)?.into_image()
}

pub fn load_labels(path: &Path) -> Result<LabelMap> {
    load_volume(path)?.into_labels()
}

pub fn load_field(path: &Path) -> Result<DisplacementField> {
    load_volume(path)?.into_field()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha20Rng;

    fn random_volume(shape: [usize; 3], channels: usize, seed: u64) -> Volume {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let data = (0..channels * numel(shape))
            .map(|_| rng.gen_range(-2.0..2.0))
            .collect();
        Volume::from_data(shape, channels, data)
    }

    #[test]
    fn save_load_roundtrip_is_bit_exact() {
        let v = random_volume([8, 8, 8], 1, 42);
        let obj = VolObject::Image(v);
        let bytes = to_vvol_bytes(&obj);
        let back = from_vvol_bytes(&bytes).unwrap();
        assert_eq!(obj, back);
    }

    #[test]
    fn field_roundtrip_smallest_case() {
        let mut f = DisplacementField::zeros([4, 4, 4]);
        f.data[5] = -1.25;
        f.data[70] = 3.5;
        let obj = VolObject::Field(f);
        let bytes = to_vvol_bytes(&obj);
        match from_vvol_bytes(&bytes).unwrap() {
            VolObject::Field(g) => assert_eq!(g.shape, [4, 4, 4]),
            other => panic!("expected field, got {}", other.kind()),
        }
        assert_eq!(from_vvol_bytes(&bytes).unwrap(), obj);
    }

    #[test]
    fn payload_sizes_match_shape_arithmetic() {
        let v = Volume::zeros([2, 2, 2], 1);
        let bytes = to_vvol_bytes(&VolObject::Image(v));
        let nl = bytes.iter().position(|&b| b == b'\n').unwrap();
        assert_eq!(bytes.len() - nl - 1, 32, "2^3 f32 payload is 32 bytes");
        assert!(bytes[nl + 1..].iter().all(|&b| b == 0));

        let f = DisplacementField::zeros([2, 2, 2]);
        let bytes = to_vvol_bytes(&VolObject::Field(f));
        let nl = bytes.iter().position(|&b| b == b'\n').unwrap();
        assert_eq!(bytes.len() - nl - 1, 96, "2*2*2*3*4 = 96 bytes");
    }

    #[test]
    fn labels_roundtrip_preserves_integers() {
        let mut m = LabelMap::zeros([3, 3, 3]);
        for (i, v) in m.data.iter_mut().enumerate() {
            *v = (i % 4) as i32;
        }
        let obj = VolObject::Labels(m.clone());
        let back = from_vvol_bytes(&to_vvol_bytes(&obj)).unwrap();
        assert_eq!(back, obj);
        assert_eq!(m.labels(), vec![1, 2, 3]);
    }

    #[test]
    fn truncated_payload_is_reported_with_counts() {
        let v = Volume::zeros([2, 2, 2], 1);
        let mut bytes = to_vvol_bytes(&VolObject::Image(v));
        bytes.truncate(bytes.len() - 5);
        match from_vvol_bytes(&bytes) {
            Err(Error::TruncatedPayload { expected, actual }) => {
                assert_eq!(expected, 32);
                assert_eq!(actual, 27);
            }
            other => panic!("expected TruncatedPayload, got {other:?}"),
        }
    }

    #[test]
    fn malformed_headers_name_the_field() {
        let ok = to_vvol_bytes(&VolObject::Image(Volume::zeros([2, 2, 2], 1)));
        let payload_start = ok.iter().position(|&b| b == b'\n').unwrap() + 1;
        let payload = &ok[payload_start..];

        let cases = [
            (r#"{"magic":"XXXX","version":1,"kind":"image","shape":[2,2,2],"channels":1,"dtype":"f32","order":"C"}"#, "magic"),
            (r#"{"magic":"VVOL","version":2,"kind":"image","shape":[2,2,2],"channels":1,"dtype":"f32","order":"C"}"#, "version"),
            (r#"{"magic":"VVOL","version":1,"kind":"flow","shape":[2,2,2],"channels":1,"dtype":"f32","order":"C"}"#, "kind"),
            (r#"{"magic":"VVOL","version":1,"kind":"image","shape":[0,2,2],"channels":1,"dtype":"f32","order":"C"}"#, "shape"),
            (r#"{"magic":"VVOL","version":1,"kind":"image","shape":[2,2,2],"channels":1,"dtype":"f32","order":"F"}"#, "order"),
        ];
        for (hdr, field) in cases {
            let mut bytes = hdr.as_bytes().to_vec();
            bytes.push(b'\n');
            bytes.extend_from_slice(payload);
            match from_vvol_bytes(&bytes) {
                Err(Error::MalformedHeader { field: f, .. }) => {
                    assert_eq!(f, field, "header {hdr}")
                }
                other => panic!("expected MalformedHeader({field}), got {other:?}"),
            }
        }

        let hdr = r#"{"magic":"VVOL","version":1,"kind":"image","shape":[2,2,2],"channels":1,"dtype":"f64","order":"C"}"#;
        let mut bytes = hdr.as_bytes().to_vec();
        bytes.push(b'\n');
        bytes.extend_from_slice(payload);
        match from_vvol_bytes(&bytes) {
            Err(Error::UnsupportedDtype { dtype, .. }) => assert_eq!(dtype, "f64"),
            other => panic!("expected UnsupportedDtype, got {other:?}"),
        }
    }

    #[test]
    fn oversized_shape_is_rejected_without_allocating() {
        let hdr = r#"{"magic":"VVOL","version":1,"kind":"image","shape":[99999999,99999999,99999999],"channels":1,"dtype":"f32","order":"C"}"#;
        let mut bytes = hdr.as_bytes().to_vec();
        bytes.push(b'\n');
        assert!(matches!(
            from_vvol_bytes(&bytes),
            Err(Error::MalformedHeader { field: "shape", .. })
        ));
    }

    #[test]
    fn normalize_minmax_maps_affinely() {
        let v = Volume::from_data([1, 1, 3], 1, vec![2.0, 4.0, 6.0]);
        let n = normalize_minmax(&v).unwrap();
        assert_eq!(n.data, vec![0.0, 0.5, 1.0]);

        let v = Volume::from_data([1, 1, 3], 1, vec![-1.0, 0.0, 3.0]);
        let n = normalize_minmax(&v).unwrap();
        assert_eq!(n.data, vec![0.0, 0.25, 1.0]);
    }

    #[test]
    fn normalize_minmax_is_idempotent() {
        let v = random_volume([6, 5, 4], 1, 7);
        let once = normalize_minmax(&v).unwrap();
        let twice = normalize_minmax(&once).unwrap();
        assert_eq!(once, twice);
        let (mn, mx) = once.min_max();
        assert_eq!((mn, mx), (0.0, 1.0));
    }

    #[test]
    fn normalize_constant_volume_errors() {
        let v = Volume::from_data([2, 2, 2], 1, vec![3.0; 8]);
        assert!(matches!(normalize_minmax(&v), Err(Error::ConstantVolume)));
    }

    #[test]
    fn center_crop_even_and_odd() {
        let v = Volume::from_fn([6, 6, 6], |h, w, l| (h * 100 + w * 10 + l) as f32);
        let c = center_crop(&v, [4, 4, 4]).unwrap();
        // 6 -> 4 keeps indices 1..=4 per axis.
        assert_eq!(c.at(0, 0, 0, 0), 111.0);
        assert_eq!(c.at(0, 3, 3, 3), 444.0);

        let v = Volume::from_fn([5, 5, 5], |h, w, l| (h * 100 + w * 10 + l) as f32);
        let c = center_crop(&v, [4, 4, 4]).unwrap();
        // 5 -> 4 ties toward the lower index: keeps 0..=3.
        assert_eq!(c.at(0, 0, 0, 0), 0.0);
        assert_eq!(c.at(0, 3, 3, 3), 333.0);
    }

    #[test]
    fn crop_composition_equals_single_crop() {
        let v = random_volume([8, 7, 9], 2, 3);
        let once = center_crop(&v, [4, 3, 5]).unwrap();
        let twice = center_crop(&center_crop(&v, [6, 5, 7]).unwrap(), [4, 3, 5]).unwrap();
        assert_eq!(once, twice);
        assert_eq!(once.channels, 2);
    }

    #[test]
    fn crop_too_large_errors() {
        let v = Volume::zeros([4, 4, 4], 1);
        assert!(matches!(
            center_crop(&v, [5, 4, 4]),
            Err(Error::CropTooLarge { .. })
        ));
    }
}
