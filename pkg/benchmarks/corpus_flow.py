"""
Metaflow flow that verifies the acceptance corpus, one task per group.

  python benchmarks/corpus_flow.py run
  python benchmarks/corpus_flow.py run --groups S3,C4,D4

Each ``verify`` task stores its theorem report as an artifact; ``join``
collects them and records whether every group agreed. Only the installed
``permutope`` package is imported, since metaflow re-executes this file as a
script for every task.
"""

from metaflow import FlowSpec, Parameter, step

from permutope.groups import ACCEPTANCE_CORPUS


class CorpusVerificationFlow(FlowSpec):

    groups = Parameter(
        "groups",
        help="Comma-separated group specs",
        default=",".join(ACCEPTANCE_CORPUS),
    )

    @step
    def start(self):
        self.group_names = [g.strip() for g in self.groups.split(",") if g.strip()]
        print(f"Verifying {len(self.group_names)} groups")
        self.next(self.verify, foreach="group_names")

    @step
    def verify(self):
        from permutope.face import verify_theorem
        from permutope.groups import parse_group_spec
        from permutope.polytope import affine_dimension, barycenter_formula, barycenter_oracle
        from permutope.report import report_to_dict

        self.group_name = self.input
        spec = parse_group_spec(self.group_name)
        g = spec.build()
        self.report = report_to_dict(verify_theorem(g, description=str(spec), workers=1))
        bary = barycenter_formula(g)
        self.barycenter_exact = bary == barycenter_oracle(g) and bary.is_doubly_stochastic()
        self.affine_dimension = affine_dimension(g)
        print(
            f"{self.group_name}: {self.report['subgroup_count']} subgroups, "
            f"{self.report['face_subgroup_count']} faces, agreement={self.report['agreement']}"
        )
        self.next(self.join)

    @step
    def join(self, inputs):
        self.reports = {inp.group_name: inp.report for inp in inputs}
        self.dimensions = {inp.group_name: inp.affine_dimension for inp in inputs}
        self.failures = sorted(
            inp.group_name for inp in inputs
            if not (inp.report["agreement"] and inp.barycenter_exact)
        )
        self.agreement = not self.failures
        self.next(self.end)

    @step
    def end(self):
        print(f"{len(self.reports)} groups verified, failures: {self.failures or 'none'}")


if __name__ == "__main__":
    CorpusVerificationFlow()
