from test.conftest import oracle_kwargs
