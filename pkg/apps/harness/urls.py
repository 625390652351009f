from django.urls import path

from .views import RunCreateView

app_name = "harness"

urlpatterns = [
    path("", RunCreateView.as_view(), name="run-create"),
]
