"""
Pipeline de verificacion sobre el corpus de instancias predefinidas.

Suites:
1. skeleton        reconstruccion de sk_n K por pushouts
2. theta           ϑ: E → F equivalencia debil en cada (d, c), e ind F_DD ≅ F_DC
3. lambda          λ: F ⊗_D X ≅ ind X
4. bar             ξ: Q̄X → X equivalencia de homologia sobre D; ε|_D iso
5. adjunction      ind ⊣ res y ⊗ ⊣ r por biyecciones explicitas
6. lcolim-hocolim  Lcolim X ≅ hocolim X con triangulo hacia colim X
7. nat-variant     Lcolim con E♮ y hocolim con igual homologia
8. oracle          homologias conocidas por construcciones independientes

Cada chequeo produce un CheckResult; los limites (cap, presupuesto) se
registran como chequeos fallidos con el testigo ``limit``.
"""

import logging
from typing import Callable

from tqdm import tqdm

from src.approx.bar import bar_approx, lambda_iso
from src.approx.canonical import build_F, check_F_induction, verify_theta_we
from src.approx.hocolim import compare_lcolim_hocolim, hocolim, hocolim_nat_variant_compare
from src.diagrams.kan import induction_adjunction_check
from src.diagrams.tensor import adjunction_bijection_check
from src.diagrams.diagram import is_objectwise_homology_equivalence
from src.homology.chains import double_mapping_cylinder, homology, homology_from_complex
from src.pipelines.corpus import Corpus, load_corpus
from src.simplicial.nerve import nerve
from src.simplicial.quotients import skeleton_pushout_check
from src.simplicial.search import iso_check
from src.simplicial.sset import invert_if_iso, skeleton
from src.utils.checks import CheckResult, combine, failed, passed
from src.utils.config_schemas import SUITE_ALIASES, SUITES, RunConfig
from src.utils.errors import LimitError

logger = logging.getLogger(__name__)


class VerificationPipeline:
    """Ejecuta las suites de verificacion y retorna resultados ordenados."""

    def __init__(self, config: RunConfig, corpus: Corpus | None = None):
        self.config = config
        self.corpus = corpus or load_corpus()
        self.suites: dict[str, Callable[[], list[CheckResult]]] = {
            "skeleton": self.run_skeleton_suite,
            "theta": self.run_theta_suite,
            "lambda": self.run_lambda_suite,
            "bar": self.run_bar_suite,
            "adjunction": self.run_adjunction_suite,
            "lcolim-hocolim": self.run_lcolim_hocolim_suite,
            "nat-variant": self.run_nat_variant_suite,
            "oracle": self.run_oracle_suite,
        }

    # -------------------------------------------------------------------------
    # Utilidades
    # -------------------------------------------------------------------------

    @staticmethod
    def _guarded(check_id: str, fn: Callable[[], CheckResult]) -> CheckResult:
        try:
            return fn()
        except LimitError as e:
            logger.warning(f"{check_id}: limite alcanzado ({e})")
            return failed(check_id, f"limite alcanzado: {e}", limit=type(e).__name__,
                          required=getattr(e, "required", None))

    def _banner(self, title: str):
        logger.info("=" * 60)
        logger.info(title)
        logger.info("=" * 60)

    def _instances(self, suite: str, key: str) -> list[str]:
        return list(self.corpus.suite(suite).get(key, []))

    # -------------------------------------------------------------------------
    # Suites
    # -------------------------------------------------------------------------

    def run_skeleton_suite(self) -> list[CheckResult]:
        self._banner("SUITE: RECONSTRUCCION POR ESQUELETOS")
        targets = {name: self.corpus.ssets[name] for name in self._instances("skeleton", "ssets")}
        for name in self._instances("skeleton", "nerves"):
            targets[f"B({name})"] = nerve(self.corpus.category(name), self.config.dim_cap)

        results = []
        for name, sset in tqdm(targets.items(), desc="skeleton", unit="sset"):
            def check(sset=sset, name=name) -> CheckResult:
                steps = [skeleton_pushout_check(sset, n) for n in range(1, sset.dimension + 1)]
                _, inclusion = skeleton(sset, max(sset.dimension, 0))
                if invert_if_iso(inclusion) is None:
                    steps.append(failed("exhaustion", "la cadena de esqueletos no agota K"))
                else:
                    steps.append(passed("exhaustion", f"sk_{sset.dimension} = K"))
                return combine(f"skeleton[{name}]", steps)
            results.append(self._guarded(f"skeleton[{name}]", check))
        return results

    def run_theta_suite(self) -> list[CheckResult]:
        self._banner("SUITE: ϑ EQUIVALENCIA DEBIL")
        cfg = self.config
        results = []
        for pair_name in tqdm(self._instances("theta", "pairs"), desc="theta", unit="par"):
            pair = self.corpus.pairs[pair_name]
            for d in pair.D_objs:
                for c in pair.C.objects:
                    check_id = f"theta[{pair_name}; {d},{c}; {cfg.op_variant}]"
                    results.append(self._guarded(check_id, lambda d=d, c=c, pair=pair, check_id=check_id: _renamed(
                        verify_theta_we(pair, d, c, cfg.up_to, cfg.op_variant, cfg.dim_cap), check_id)))
            results.append(self._guarded(
                f"F-induction[{pair_name}]",
                lambda pair=pair, name=pair_name: _renamed(check_F_induction(pair, cfg.search_budget),
                                                           f"F-induction[{name}]"),
            ))
        return results

    def run_lambda_suite(self) -> list[CheckResult]:
        self._banner("SUITE: ISOMORFISMO λ")
        results = []
        for pair_name in tqdm(self._instances("lambda", "pairs"), desc="lambda", unit="par"):
            pair = self.corpus.pairs[pair_name]
            names = self._instances("lambda", "diagrams")
            for name, (_, res) in zip(names, self.corpus.pair_diagrams(pair_name, names)):
                check_id = f"lambda[{pair_name}; {name}]"

                def check(pair=pair, res=res, check_id=check_id) -> CheckResult:
                    lam = lambda_iso(pair, res)
                    steps = [lam.check]
                    if set(pair.D_objs) == set(pair.C.objects):
                        for obj in pair.C.objects:
                            if iso_check(lam.tensor.diagram.value[obj], res.value[obj],
                                         self.config.search_budget) is None:
                                steps.append(failed("F⊗X≅X", f"no isomorfos en '{obj}'", object=obj))
                                break
                        else:
                            steps.append(passed("F⊗X≅X", "isomorfos objeto a objeto"))
                    return combine(check_id, steps)
                results.append(self._guarded(check_id, check))
        return results

    def run_bar_suite(self) -> list[CheckResult]:
        self._banner("SUITE: APROXIMACION BAR")
        cfg = self.config
        results = []
        for pair_name in tqdm(self._instances("bar", "pairs"), desc="bar", unit="par"):
            pair = self.corpus.pairs[pair_name]
            names = self._instances("bar", "diagrams")
            for name, (X, _) in zip(names, self.corpus.pair_diagrams(pair_name, names)):
                check_id = f"bar[{pair_name}; {name}; {cfg.op_variant}]"

                def check(X=X, pair=pair, check_id=check_id) -> CheckResult:
                    bar = bar_approx(X, pair, cfg.op_variant, dim_cap=cfg.dim_cap)
                    steps = [is_objectwise_homology_equivalence(bar.xi, pair.D_objs, cfg.up_to)]
                    for d in pair.D_objs:
                        if invert_if_iso(bar.eps.components[d]) is None:
                            steps.append(failed("counit", f"ε no es iso en '{d}'", object=d))
                            break
                    else:
                        steps.append(passed("counit", "ε|_D isomorfismo"))
                    return combine(check_id, steps)
                results.append(self._guarded(check_id, check))
        return results

    def run_adjunction_suite(self) -> list[CheckResult]:
        self._banner("SUITE: ADJUNCIONES")
        cfg = self.config
        results = []
        for pair_name in tqdm(self._instances("adjunction", "pairs"), desc="adjunction", unit="par"):
            pair = self.corpus.pairs[pair_name]
            names = self._instances("adjunction", "diagrams")
            instances = list(zip(names, self.corpus.pair_diagrams(pair_name, names)))
            F = build_F(pair)
            for y_name, (_, Y) in instances:
                for z_name, (Z, _) in instances:
                    ind_id = f"adjunction[ind⊣res; {pair_name}; {y_name}→{z_name}]"
                    results.append(self._guarded(ind_id, lambda Y=Y, Z=Z, i=ind_id: _renamed(
                        induction_adjunction_check(Y, Z, cfg.search_budget), i)))
                    tensor_id = f"adjunction[⊗⊣r; {pair_name}; {y_name}→{z_name}]"
                    results.append(self._guarded(tensor_id, lambda Y=Y, Z=Z, i=tensor_id: _renamed(
                        adjunction_bijection_check(F, Y, Z, cfg.mapping_q_max, cfg.search_budget), i)))
        return results

    def run_lcolim_hocolim_suite(self) -> list[CheckResult]:
        self._banner("SUITE: Lcolim ≅ hocolim")
        results = []
        for cat_name in tqdm(self._instances("lcolim-hocolim", "categories"), desc="lcolim", unit="cat"):
            for name in self._instances("lcolim-hocolim", "diagrams"):
                X = self.corpus.diagram(cat_name, name)
                check_id = f"lcolim-hocolim[{cat_name}; {name}]"
                results.append(self._guarded(check_id, lambda X=X, i=check_id: _renamed(
                    compare_lcolim_hocolim(X, self.config.dim_cap).check, i)))
        return results

    def run_nat_variant_suite(self) -> list[CheckResult]:
        self._banner("SUITE: VARIANTE NATURAL")
        cfg = self.config
        results = []
        for cat_name in tqdm(self._instances("nat-variant", "categories"), desc="nat-variant", unit="cat"):
            for name in self._instances("nat-variant", "diagrams"):
                X = self.corpus.diagram(cat_name, name)
                check_id = f"nat-variant[{cat_name}; {name}]"
                results.append(self._guarded(check_id, lambda X=X, i=check_id: _renamed(
                    hocolim_nat_variant_compare(X, cfg.up_to, cfg.dim_cap), i)))
        return results

    def run_oracle_suite(self) -> list[CheckResult]:
        """hocolim del punto = B(C); hocolim de un span = doble cilindro."""
        self._banner("SUITE: ORACULOS DE HOMOLOGIA")
        cfg = self.config
        results = []
        for cat_name in tqdm(self._instances("oracle", "categories"), desc="oracle", unit="cat"):
            C = self.corpus.category(cat_name)
            check_id = f"oracle[hocolim pt = B({cat_name})]"

            def point_check(C=C, cat_name=cat_name, check_id=check_id) -> CheckResult:
                X = self.corpus.diagram(cat_name, "point")
                got = homology(hocolim(X, cfg.dim_cap), cfg.up_to)
                expected = homology(nerve(C, cfg.dim_cap), cfg.up_to)
                if got != expected:
                    return failed(check_id, "homologia distinta", hocolim=got.betti, nerve=expected.betti)
                return passed(check_id, "homologia del nervio (nivel homologia)", betti=got.betti)
            results.append(self._guarded(check_id, point_check))

        if "span" in self.corpus.categories:
            X = self.corpus.diagram("span", "mixed")
            check_id = "oracle[hocolim span mixed = doble cilindro]"

            def span_check() -> CheckResult:
                got = homology(hocolim(X, cfg.dim_cap), cfg.up_to)
                expected = homology_from_complex(
                    double_mapping_cylinder(X.action["f"], X.action["g"], cfg.up_to), cfg.up_to)
                if got != expected:
                    return failed(check_id, "homologia distinta", hocolim=got.betti, cylinder=expected.betti)
                return passed(check_id, "coincide con el doble cilindro (nivel homologia)", betti=got.betti)
            results.append(self._guarded(check_id, span_check))
        return results

    # -------------------------------------------------------------------------
    # Orquestacion
    # -------------------------------------------------------------------------

    def run(self, suite: str) -> list[CheckResult]:
        """Ejecuta una suite (o ``all``) y retorna los chequeos ordenados por id."""
        suite = SUITE_ALIASES.get(suite, suite)
        if suite not in SUITES:
            raise ValueError(f"Suite desconocida: {suite}")
        names = [s for s in self.suites] if suite == "all" else [suite]
        results: list[CheckResult] = []
        for name in names:
            results.extend(self.suites[name]())
        results.sort(key=lambda c: c.check_id)
        ok = sum(1 for c in results if c.passed)
        logger.info(f"Verificacion '{suite}': {ok}/{len(results)} chequeos OK")
        return results


def _renamed(check: CheckResult, check_id: str) -> CheckResult:
    """Mismo resultado con el id de la instancia del corpus."""
    check.check_id = check_id
    return check
