//! Displayed formulas that cannot be derived and are therefore copied by hand.
//!
//! Every entry carries a SHA-256 prefix of its text. `verify_checksums` recomputes
//! them, so an accidental edit is reported under the entry's id instead of
//! surfacing as a mysterious mismatch somewhere downstream.
//!
//! Text uses the polynomial parser's syntax: juxtaposition is multiplication.

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactalg::MultiPoly;

#[derive(Debug, Clone, Copy)]
pub struct Display {
    pub id: &'static str,
    pub text: &'static str,
    pub sha256: &'static str,
}

impl Display {
    pub fn poly(&self) -> Result<MultiPoly> {
        MultiPoly::parse(self.text).map_err(|e| Error::Parse(format!("{}: {e}", self.id)))
    }

    pub fn checksum(&self) -> String {
        let digest = Sha256::digest(self.text.as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

macro_rules! display {
    ($name:ident, $id:expr, $sha:expr, $text:expr) => {
        pub const $name: Display = Display {
            id: $id,
            text: $text,
            sha256: $sha,
        };
    };
}

// cover polynomials
display!(F1, "cover.F1", "12d94f16c217a651", "x^2 + (2a + 2b + a^2)x + 2ab + b^2");
display!(F2, "cover.F2", "9d6b89e5da3a47dc", "(2a + 1)x^2 + (a^2 + 2ab + 2b)x + b^2");
display!(F3, "cover.F3", "d67fe1559509997d", "x^2 - (a^2 - 2b)x + b^2");
display!(F4, "cover.F4", "7949e71becf2497e", "(2a + 1)x^2 + (2b - 2ba - 2a - a^2)x + b^2 + 2ab");

// g3 coefficients; a0 contains the stray token `12ya`, a2 a trailing `)`.
display!(G3_A0, "g3.a0", "c07dd444b944fc26", "-b^4(2b^3a + 4b^3 - 2zab^2 + 7b^2a^2 + 8zb^2 + 4b^2 + 16ab^2 + 16zba + 6a^3b + 8ba + 2za^2b + 12zb + 16ba^2 + 13za^2 + za^4 + 6za^3 + 4z + 12ya)");
display!(G3_A1, "g3.a1", "89c8f1bdf78126c4", "-b^2(12b^3 + 12b^4a + 32zba - 6a^4b^2 + 44b^2a^3 + 6ba^2 + 24ab^2 + 10a^3b + 44b^3a^2 + 2ba + 52b^3a + 61b^2a^2 - 12ba^5 - 7za^2 - 2za + 12zb - 4a^6 + 12b^4 - a^4 - 40za^3b^2 - 16zb^3a^2 - 12za^5 + 36zb^2 - 18za^3 - 26za^4 + 56zab^2 + 4azb^3 + 2za^2b^2 - 20za^3b + 28za^2b + 2za^6 + 24zb^3 + 4zba^5 - 4a^5 - 32za^4b)");
display!(G3_A2, "g3.a2", "6811020c387a5fa9", "5b^2a^6 + 20b^2a^5 + 8ba^6 - 61b^4a^2 - 18b^5a - 56b^4a + 4zba + 5a^4b^2 - 18b^2a^3 - 24zb^4 - 14zb^4a - 4ab^2 + 8b^3a^4 + 2b^3a^5 - 54b^3a^3 - 70b^3a^2 - 24b^3a - 14b^2a^2 + 4a^4b + 10ba^5 - 6za^7 + 64za^3b^3 + 38za^4b^2 + 54za^3b^2 + 12zb^3a^2 - 14za^6b - 10zb^2a^5 - 4za^7b - 4a^6zb^2 + 32a^2b^4z + 2a^7b - za^8 - 36zb^3 - 12za^5 - 12zb^2 - 4za^4 - 28zab^2 - 64azb^3 - 5za^2b^2 + 16za^2b + 28za^4b - 4zba^5 - 13za^6 - 12b^5 - 12b^4 + 34za^3b)");
display!(G3_A3, "g3.a3", "fe234227c120412e", "(2a + 1)(za^4 - 2a^3b + 4za^3 + 6za^3b - 4ba^2 + 12za^2b^2 + 10za^2b - 9b^2a^2 + 5za^2 - 2ba + 2za - 8ab^2 - 12b^3a + 8azb^3 - 4b^3 - 4zb - 4b^4 - 12zb^2 - 8zb^3)");

/// The nine factors of Δ(a, b).
pub const DELTA_FACTORS: [Display; 9] = [
    Display { id: "delta.1", text: "a + b + 1", sha256: "e3e2496a1b92f3f6" },
    Display { id: "delta.2", text: "b", sha256: "3e23e8160039594a" },
    Display { id: "delta.3", text: "2a + 1", sha256: "25a88eae1b711ae3" },
    Display { id: "delta.4", text: "a - b - 1", sha256: "da92d8d943210628" },
    Display { id: "delta.5", text: "a^2 - 4b", sha256: "1d5116b28bc16214" },
    Display { id: "delta.6", text: "4b + 4 + 4a + a^2", sha256: "338cbe817f28d87a" },
    Display { id: "delta.7", text: "4b^2 + 4b + 4ba + a^2", sha256: "ae45dcb4f31906a4" },
    Display { id: "delta.8", text: "a^3 - 2b - 2ba - 2b^2", sha256: "3a3559ea214f3752" },
    Display { id: "delta.9", text: "2a + b", sha256: "c534b35cbc478855" },
];

// S3 invariants and the w-tower
display!(U_NUM, "uv.u.num", "cf762c119599bafd", "2a(ab + b^2 + b + a + 1)");
display!(U_DEN, "uv.u.den", "60f3ff2c41eef632", "b(a + b + 1)");
display!(V_NUM, "uv.v.num", "7b48479868582d73", "a^3");
display!(V_DEN, "uv.v.den", "60f3ff2c41eef632", "b(a + b + 1)");
display!(W_NUM, "tower.w.num", "2fe44ecea919a17e", "(z^2 - z + 1)^3");
display!(W_DEN, "tower.w.den", "b4651e6e17a7a7e4", "z^2(z - 1)^2");
display!(C2, "tower.c2", "be1ffa5d30d4902f", "64v^2(u - 4v + 1)^2");
display!(C1, "tower.c1", "8a40a24c8e922abf", "-4v(-272v^2u - 20vu^2 + 2592v^3 - 4672v^2 + 4u^3 + 16v^3u^2 - 15vu^4 - 96v^2u^2 + 24v^2u^3 + 2u^5 - 12u^4 + 92vu^3 + 576vu - 128v^4 - 288v^3u)");
display!(C0, "tower.c0", "e449d022b94f9d30", "(u^2 + 4vu + 4v^2 - 48v)^3");
display!(DELTA_W, "tower.delta_w", "aec82782edd16fb1", "16(v-16+2u)(2u^3+u^2v-36uv-16v^2-108v)(u-4v-2)^2(16v-4uv+u^2)^2v^2");

// case I
display!(CASE1_Z_NUM, "case1.z.num", "73ed01768261c30b", "a(8+a)");
display!(CASE1_Z_DEN, "case1.z.den", "1ded67658f52cade", "4(2a+1)");
display!(CASE1_LAMBDA_NUM, "case1.lambda.num", "f64d4e2310d9e979", "4(2a+1)^3(a^2+4a+8)^2");
display!(CASE1_LAMBDA_DEN, "case1.lambda.den", "7ce66d6ea627731b", "(2-a)^5(a+2)^3");
display!(CASE1_J2, "case1.J2", "2b47e738da3fa57e", "5859375T^6 - 129843750T^5 - 31959375T^4 - 6330100T^3 - 54927T^2 + 12506T - 17");
display!(CASE1_I1, "case1.i1", "3c4594bb851a0e3a", "45(200225830078125T^12 - 1719272460937500T^11 + 565236035156250T^10 - 54100617187500T^9 + 13999178671875T^8 - 4261746675000T^7 + 606825435500T^6 - 54844543800T^5 + 4205965699T^4 - 236021164T^3 + 6405914T^2 + 6116T - 211)");
display!(CASE1_I2, "case1.i2", "75ef49901c8ae1f5", "135(6335270404815673828125T^18 + 113021224021911621093750T^17 - 137079483776092529296875T^16 + 35382386975097656250000T^15 - 5727170209350585937500T^14 + 1661335117119140625000T^13 - 438672743956054687500T^12 + 71535083209593750000T^11 - 9593401735688906250T^10 + 1451100945145362500T^9 - 198805994903162250T^8 + 18781404045085680T^7 - 1082976623440908T^6 + 34245258932328T^5 - 572847931740T^4 + 10845126800T^3 - 380189355T^2 + 11646582T - 3107)");
display!(CASE1_I3, "case1.i3", "141be2446fcd07ee", "49766400T(9T - 1)^5(25T^2 + 6T + 1)^5(25T - 1)^7");
display!(CASE1_J_NUM, "case1.j.num", "5afb8c34d51dffb5", "(11390625T^8 + 1215000T^7 + 99900T^6 + 925032T^5 + 550T^4 + 40T^3 + 380T^2 - 40T + 1)^3");
display!(CASE1_J_DEN, "case1.j.den", "456e00ab46e2f1d7", "4096T^5(25T - 1)^2(25T^2 + 6T + 1)^4(9T - 1)^6");

/// T-values with automorphism group V4 on the case I locus.
pub const CASE1_V4_FACTORS: [Display; 7] = [
    Display { id: "case1.v4.1", text: "5625T^3 - 650T^2 + 73T + 8", sha256: "6fb46bd8aefddc29" },
    Display { id: "case1.v4.2", text: "1265625T^4 - 67500T^3 + 89550T^2 + 516T + 1", sha256: "b8222603d59bb4ee" },
    Display { id: "case1.v4.3", text: "625T^3 - 25T^2 - 9T + 1", sha256: "b1cb705cf4d46535" },
    Display { id: "case1.v4.4", text: "5625T^5 + 18075T^4 + 8282T^3 + 918T^2 - 131T - 1", sha256: "cf8f00e22526550b" },
    Display { id: "case1.v4.5", text: "109375T^5 + 18125T^4 - 12450T^3 + 1186T^2 - 13T + 1", sha256: "57746e795354c373" },
    Display { id: "case1.v4.6", text: "7119140625T^7 + 6391406250T^6 + 2582859375T^5 + 476007500T^4 + 19626975T^3 - 1411606T^2 + 257473T - 4096", sha256: "e0eea0475d12d3cd" },
    Display { id: "case1.v4.7", text: "158203125000T^9 + 85869140625T^8 + 32415625000T^7 + 6116187500T^6 + 74885000T^5 - 94007050T^4 - 7398504T^3 + 1091468T^2 + 48T + 1", sha256: "9f075184077adca8" },
];

// case II
display!(CASE2_Z_NUM, "case2.z.num", "77fc5e927e212208", "(3a - 1)(a - 1)");
display!(CASE2_Z_DEN, "case2.z.den", "41a586e933beb4ee", "(2a + 1)");
display!(CASE2_B3, "case2.b3", "52d252caa6bff88d", "(2a+1)(-8+9a)^2");
display!(CASE2_B2, "case2.b2", "b05b8d5c4cdf5dbe", "-27a^6 - 54a^5 + 468a^4 - 958a^3 + 381a^2 + 400a - 192");
display!(CASE2_B1, "case2.b1", "879c04b86eb11acb", "-18a^6 + 380a^5 - 1000a^4 + 726a^3 + 499a^2 - 752a + 192");
display!(CASE2_B0, "case2.b0", "daedbe8ccdab24cf", "(a+8)^2(a-1)^3(3a-1)");
display!(CASE2_NONVANISHING, "case2.nonvanishing", "c4f2b72db799b01c", "a(9a-8)(a+8)(2a+1)(3a-1)(a-1)(a-2)");
display!(CASE2_LAMBDA_NUM, "case2.lambda.num", "b73ec1e5bbe9c3da", "(3a-1)^3(a+8)^2(a-1)");
display!(CASE2_LAMBDA_DEN, "case2.lambda.den", "d8b3f7c15123f5c2", "27a(a-2)^5");
display!(CASE2_J2, "case2.J2", "3a45c32ba3926bec", "4375T^4 - 12850T^3 + 11457T^2 + 458T + 43");
display!(CASE2_I1, "case2.i1", "38280b794355331e", "-9(1953125T^8 + 100859375T^7 - 133684375T^6 - 17761750T^5 + 60906155T^4 - 14020705T^3 + 115631T^2 - 46816T - 256)");
display!(CASE2_I2, "case2.i2", "026a888b8bd0a2fc", "-27/8(96435546875T^12 - 4709765625000T^11 + 10970742187500T^10 + 4833343750000T^9 - 31399133343750T^8 + 30923034102000T^7 - 13348926086820T^6 + 3049853644080T^5 - 409782059325T^4 + 10407596440T^3 + 1223394432T^2 - 18880512T + 32768)");
display!(CASE2_I3, "case2.i3", "a74a55ed68ccb2ae", "-59049/4096T^2(25T-1)^5(25T-16)^5(T-1)^7");
display!(CASE2_J_NUM, "case2.j.num", "74f1fd379b64830f", "(9765625T^6 - 23437500T^5 + 19218750T^4 - 6087500T^3 + 560625T^2 + 166368T + 256)^3");
display!(CASE2_J_DEN, "case2.j.den", "d78b5d4bcd1a9a6f", "729T(T-1)^2(25T-16)^4(25T-1)^6");

/// T-values with automorphism group V4 on the case II locus.
pub const CASE2_V4_FACTORS: [Display; 7] = [
    Display { id: "case2.v4.1", text: "25T^2 + 34T + 13", sha256: "19a36e46c9803dab" },
    Display { id: "case2.v4.2", text: "25T^2 - 26T + 10", sha256: "b29a16d2d0cda2e4" },
    Display { id: "case2.v4.3", text: "15625T^3 - 3750T^2 - 6075T + 32", sha256: "e18ffb5ffec58b96" },
    Display { id: "case2.v4.4", text: "225T^3 - 634T^2 - 151T - 16", sha256: "8b709aa73a93ffdd" },
    Display { id: "case2.v4.5", text: "625T^4 - 800T^3 + 156T^2 + 74T - 1", sha256: "39360a1499a70947" },
    Display { id: "case2.v4.6", text: "625T^5 + 22325T^4 + 892131T^3 - 338857T^2 + 48160T - 2304", sha256: "33f9b6491e74d788" },
    Display { id: "case2.v4.7", text: "421875T^6 + 2402500T^5 - 6942350T^4 + 5673748T^3 - 1488397T^2 - 20464T - 256", sha256: "fe6e9985ba823415" },
];

// case III
display!(CASE3_CONDITION_A, "case3.condition_a", "6c85a88433e7f8d0", "a(a^3 + 4ba^2 + 4a^2 - 12ba + 4ab^2 + 4a - 16b - 16b^2)");
display!(CASE3_CONDITION, "case3.condition", "a4a2b8e73ee25e73", "a^3 + 4ba^2 + 4a^2 - 12ba + 4ab^2 + 4a - 16b - 16b^2");
display!(Y3BAR_J, "case3.j", "a707772e8df22c61", "702595369/72900");
display!(CASE3_Z_NUM, "case3.z.num", "2c2326c083f63637", "a^2 + 2ab + 2a - 2b");
display!(CASE3_Z_DEN, "case3.z.den", "c586aab148b91229", "2(2a+1)");
display!(CASE3_CONST_NUM, "case3.const.num", "cd7521258c95b144", "3a(a^2 - 4)");
display!(CASE3_CONST_DEN, "case3.const.den", "47385efaaaf86275", "4(2a+1)(a-4)");
display!(CASE3_NONVANISHING, "case3.nonvanishing", "9fa4e9673a5c49be", "a(a^2 - 4)(2a + 1)(3a^3 - 12a - 1)(a - 4)(96a^5 - 400a^4 - 128a^3 + 800a^2 - 72a - 225)");
display!(Y3_UV_LINE, "case3.uv_line", "3a7a1c3002d1b492", "2u + v - 16");

/// Case III V4 factors with their displayed exponents.
pub const CASE3_V4_FACTORS: [(Display, u32); 8] = [
    (Display { id: "case3.v4.1", text: "24a^5 - 84a^4 - 144a^3 + 328a^2 + 220a + 17", sha256: "d9072cd2e40313d9" }, 1),
    (Display { id: "case3.v4.2", text: "96a^5 - 400a^4 - 131a^3 + 800a^2 - 60a - 224", sha256: "129d40d12e5282df" }, 2),
    (Display { id: "case3.v4.3", text: "72a^5 - 316a^4 + 16a^3 + 472a^2 - 292a - 241", sha256: "da88e23b320e90f1" }, 2),
    (Display { id: "case3.v4.4", text: "9a^6 - 72a^4 - 6a^3 + 152a^2 - 4a - 15", sha256: "3de2b42803b71ed8" }, 1),
    (Display { id: "case3.v4.5", text: "9216a^10 - 76800a^9 + 136000a^8 + 252832a^7 - 634615a^6 - 184640a^5 + 824616a^4 - 57222a^3 - 340360a^2 + 30348a + 47025", sha256: "973593f3c0780455" }, 1),
    (Display { id: "case3.v4.6", text: "216a^11 + 1548a^10 - 20688a^9 + 25776a^8 + 133824a^7 - 190976a^6 - 286296a^5 + 289508a^4 + 231440a^3 - 65056a^2 - 58032a - 6975", sha256: "877b6620cc6f7bd1" }, 1),
    (Display { id: "case3.v4.7", text: "27648a^13 - 230400a^12 + 295680a^11 + 1689600a^10 - 3531264a^9 - 3711808a^8 + 10386272a^7 + 2095872a^6 - 11895424a^5 + 1027312a^4 + 5156035a^3 - 398800a^2 - 849036a - 61696", sha256: "e3c43bd048fcbe2b" }, 1),
    (Display { id: "case3.v4.8", text: "648a^14 + 4644a^13 - 64656a^12 + 58320a^11 + 658152a^10 - 935328a^9 - 2364128a^8 + 3266608a^7 + 3718976a^6 - 3536792a^5 - 2448532a^4 + 439027a^3 + 404320a^2 + 174132a + 57600", sha256: "9bac4e4e0db1bbff" }, 1),
];

/// Every entry, for checksum verification and reporting.
pub fn all() -> Vec<Display> {
    let mut v = vec![
        F1, F2, F3, F4, G3_A0, G3_A1, G3_A2, G3_A3, U_NUM, U_DEN, V_NUM, V_DEN, W_NUM,
        W_DEN, C2, C1, C0, DELTA_W, CASE1_Z_NUM, CASE1_Z_DEN, CASE1_LAMBDA_NUM, CASE1_LAMBDA_DEN,
        CASE1_J2, CASE1_I1, CASE1_I2, CASE1_I3, CASE1_J_NUM, CASE1_J_DEN, CASE2_Z_NUM,
        CASE2_Z_DEN, CASE2_B3, CASE2_B2, CASE2_B1, CASE2_B0, CASE2_NONVANISHING, CASE2_LAMBDA_NUM,
        CASE2_LAMBDA_DEN, CASE2_J2, CASE2_I1, CASE2_I2, CASE2_I3, CASE2_J_NUM, CASE2_J_DEN, CASE3_CONDITION_A,
        CASE3_CONDITION, Y3BAR_J, CASE3_Z_NUM, CASE3_Z_DEN, CASE3_CONST_NUM, CASE3_CONST_DEN, CASE3_NONVANISHING, Y3_UV_LINE,
    ];
    v.extend(DELTA_FACTORS);
    v.extend(CASE1_V4_FACTORS);
    v.extend(CASE2_V4_FACTORS);
    v.extend(CASE3_V4_FACTORS.iter().map(|(d, _)| *d));
    v
}

/// Ids of entries whose text no longer matches the recorded checksum.
pub fn verify_checksums() -> Vec<&'static str> {
    all()
        .into_iter()
        .filter(|d| d.checksum() != d.sha256)
        .map(|d| d.id)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksums_match() {
        assert_eq!(verify_checksums(), Vec::<&str>::new());
    }

    #[test]
    fn everything_parses_except_the_known_defect() {
        for d in all() {
            let r = d.poly();
            if d.id == "g3.a0" || d.id == "g3.a2" {
                assert!(r.is_err(), "{} is expected to be defective", d.id);
            } else {
                assert!(r.is_ok(), "{}: {:?}", d.id, r.err());
            }
        }
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = all().iter().map(|d| d.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }
}
