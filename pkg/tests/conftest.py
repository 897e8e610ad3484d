import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture])
settings.load_profile("default")


# -- shared, expensive objects

@pytest.fixture(scope="session")
def svec_coend():
    from coendkit import fixtures as fx
    from coendkit.coend import build_coend
    from coendkit.linalg import PrimeField

    cd = build_coend(fx.svec_ambient(PrimeField(3)))
    cd.derive_structure()
    return cd


@pytest.fixture(scope="session")
def svec_coend_q():
    from coendkit import fixtures as fx
    from coendkit.coend import build_coend

    cd = build_coend(fx.svec_ambient())
    cd.derive_structure()
    return cd


@pytest.fixture(scope="session")
def anyon_coend():
    from coendkit import fixtures as fx
    from coendkit.coend import build_coend

    cd = build_coend(fx.anyon_ambient())
    cd.derive_structure()
    return cd


@pytest.fixture(scope="session")
def exterior(svec_coend):
    from coendkit.internal_hopf import exterior_line

    return exterior_line(svec_coend)


@pytest.fixture(scope="session")
def exterior_Rs(exterior):
    from coendkit.search import SearchSpec, enumerate_elements

    return [h.mat for h in enumerate_elements(SearchSpec("r_matrix", exterior))]
